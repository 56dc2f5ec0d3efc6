use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};

use crate::error::{Error, Result};
use crate::geometry::{Bound, CubeUnion, Point};

/// `constant + Σ coeff·x_var`, with zero coefficients never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LinearTerm {
    pub constant: i64,
    coeffs: BTreeMap<usize, i64>,
}

impl LinearTerm {
    pub fn constant(c: i64) -> Self {
        LinearTerm { constant: c, coeffs: BTreeMap::new() }
    }

    pub fn var(index: usize) -> Self {
        LinearTerm { constant: 0, coeffs: BTreeMap::from([(index, 1)]) }
    }

    pub fn coeffs(&self) -> &BTreeMap<usize, i64> {
        &self.coeffs
    }

    pub fn coeff(&self, var: usize) -> i64 {
        self.coeffs.get(&var).copied().unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &LinearTerm) -> Result<LinearTerm> {
        let mut out = self.clone();
        out.constant = out.constant.checked_add(other.constant).ok_or(Error::Overflow)?;
        for (&v, &c) in &other.coeffs {
            let sum = out.coeff(v).checked_add(c).ok_or(Error::Overflow)?;
            if sum == 0 {
                out.coeffs.remove(&v);
            } else {
                out.coeffs.insert(v, sum);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, k: i64) -> Result<LinearTerm> {
        if k == 0 {
            return Ok(LinearTerm::constant(0));
        }
        let mut coeffs = BTreeMap::new();
        for (&v, &c) in &self.coeffs {
            coeffs.insert(v, c.checked_mul(k).ok_or(Error::Overflow)?);
        }
        Ok(LinearTerm { constant: self.constant.checked_mul(k).ok_or(Error::Overflow)?, coeffs })
    }

    pub fn sub(&self, other: &LinearTerm) -> Result<LinearTerm> {
        self.add(&other.scale(-1)?)
    }

    pub fn offset(&self, k: i64) -> Result<LinearTerm> {
        self.add(&LinearTerm::constant(k))
    }

    pub fn eval(&self, v: &Point) -> i128 {
        self.coeffs.iter().fold(i128::from(self.constant), |acc, (&i, &c)| acc + i128::from(c) * i128::from(v[i]))
    }

    fn max_var(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    fn write_smtlib(&self, out: &mut String, names: &[String]) {
        let mut parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(&i, &c)| match c {
                1 => names[i].clone(),
                _ => format!("(* {} {})", smt_int(c), names[i]),
            })
            .collect();
        if self.constant != 0 || parts.is_empty() {
            parts.push(smt_int(self.constant));
        }
        if parts.len() == 1 {
            out.push_str(&parts[0]);
        } else {
            let _ = write!(out, "(+ {})", parts.join(" "));
        }
    }
}

fn smt_int(c: i64) -> String {
    if c < 0 {
        format!("(- {})", c.unsigned_abs())
    } else {
        c.to_string()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rel {
    Le,
    Ge,
    Eq,
}

impl Rel {
    fn symbol(self) -> &'static str {
        match self {
            Rel::Le => "<=",
            Rel::Ge => ">=",
            Rel::Eq => "=",
        }
    }
}

/// Quantifier-free linear integer arithmetic. `Not` and `Implies` only
/// appear before [`Formula::normalize`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    Atom(LinearTerm, Rel, LinearTerm),
    And(Vec<Formula>),
    Or(Vec<Formula>),
    Not(Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
}

impl Formula {
    /// `0 ≤ 0`
    pub fn tt() -> Formula {
        Formula::Atom(LinearTerm::constant(0), Rel::Le, LinearTerm::constant(0))
    }

    /// `0 ≤ -1`
    pub fn ff() -> Formula {
        Formula::Atom(LinearTerm::constant(0), Rel::Le, LinearTerm::constant(-1))
    }

    pub fn atom(lhs: LinearTerm, rel: Rel, rhs: LinearTerm) -> Formula {
        Formula::Atom(lhs, rel, rhs)
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn eval(&self, v: &Point) -> bool {
        match self {
            Formula::Atom(l, rel, r) => {
                let (a, b) = (l.eval(v), r.eval(v));
                match rel {
                    Rel::Le => a <= b,
                    Rel::Ge => a >= b,
                    Rel::Eq => a == b,
                }
            }
            Formula::And(fs) => fs.iter().all(|f| f.eval(v)),
            Formula::Or(fs) => fs.iter().any(|f| f.eval(v)),
            Formula::Not(f) => !f.eval(v),
            Formula::Implies(a, b) => !a.eval(v) || b.eval(v),
        }
    }

    /// Negation normal form over `≤`, `≥`, `=` atoms.
    pub fn normalize(&self) -> Result<Formula> {
        self.nnf(false)
    }

    fn nnf(&self, negated: bool) -> Result<Formula> {
        Ok(match (self, negated) {
            (Formula::Atom(..), false) => self.clone(),
            (Formula::Atom(l, rel, r), true) => match rel {
                Rel::Le => Formula::Atom(l.clone(), Rel::Ge, r.offset(1)?),
                Rel::Ge => Formula::Atom(l.clone(), Rel::Le, r.offset(-1)?),
                Rel::Eq => Formula::Or(vec![
                    Formula::Atom(l.clone(), Rel::Le, r.offset(-1)?),
                    Formula::Atom(l.clone(), Rel::Ge, r.offset(1)?),
                ]),
            },
            (Formula::And(fs), false) | (Formula::Or(fs), true) => {
                Formula::And(fs.iter().map(|f| f.nnf(negated)).collect::<Result<_>>()?)
            }
            (Formula::Or(fs), false) | (Formula::And(fs), true) => {
                Formula::Or(fs.iter().map(|f| f.nnf(negated)).collect::<Result<_>>()?)
            }
            (Formula::Not(f), _) => f.nnf(!negated)?,
            (Formula::Implies(a, b), false) => Formula::Or(vec![a.nnf(true)?, b.nnf(false)?]),
            (Formula::Implies(a, b), true) => Formula::And(vec![a.nnf(false)?, b.nnf(true)?]),
        })
    }

    /// Normalized negation.
    pub fn negate(&self) -> Result<Formula> {
        self.nnf(true)
    }

    pub fn is_normalized(&self) -> bool {
        match self {
            Formula::Atom(..) => true,
            Formula::And(fs) | Formula::Or(fs) => fs.iter().all(Formula::is_normalized),
            Formula::Not(_) | Formula::Implies(..) => false,
        }
    }

    /// Every atom mentions at most one variable.
    pub fn is_monadic(&self) -> bool {
        self.atoms().iter().all(|(l, _, r)| {
            let vars: BTreeSet<usize> = l.coeffs().keys().chain(r.coeffs().keys()).copied().collect();
            vars.len() <= 1
        })
    }

    pub fn atoms(&self) -> Vec<(&LinearTerm, Rel, &LinearTerm)> {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms<'a>(&'a self, out: &mut Vec<(&'a LinearTerm, Rel, &'a LinearTerm)>) {
        match self {
            Formula::Atom(l, rel, r) => out.push((l, *rel, r)),
            Formula::And(fs) | Formula::Or(fs) => fs.iter().for_each(|f| f.collect_atoms(out)),
            Formula::Not(f) => f.collect_atoms(out),
            Formula::Implies(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }

    /// Number of variables needed to evaluate the formula.
    pub fn min_dim(&self) -> usize {
        self.atoms().iter().filter_map(|(l, _, r)| l.max_var().max(r.max_var())).max().map_or(0, |m| m + 1)
    }

    /// Largest absolute constant or coefficient appearing in an atom.
    pub fn max_constant(&self) -> u64 {
        self.atoms()
            .iter()
            .flat_map(|(l, _, r)| {
                [l.constant, r.constant]
                    .into_iter()
                    .chain(l.coeffs().values().copied())
                    .chain(r.coeffs().values().copied())
            })
            .map(i64::unsigned_abs)
            .max()
            .unwrap_or(0)
    }

    pub fn to_smtlib(&self, names: &[String]) -> String {
        let mut out = String::new();
        self.write_smtlib(&mut out, names);
        out
    }

    fn write_smtlib(&self, out: &mut String, names: &[String]) {
        let list = |out: &mut String, op: &str, fs: &[Formula], empty: &str| match fs {
            [] => out.push_str(empty),
            [f] => f.write_smtlib(out, names),
            _ => {
                let _ = write!(out, "({op}");
                for f in fs {
                    out.push(' ');
                    f.write_smtlib(out, names);
                }
                out.push(')');
            }
        };
        match self {
            Formula::Atom(l, rel, r) => {
                let _ = write!(out, "({} ", rel.symbol());
                l.write_smtlib(out, names);
                out.push(' ');
                r.write_smtlib(out, names);
                out.push(')');
            }
            Formula::And(fs) => list(out, "and", fs, "true"),
            Formula::Or(fs) => list(out, "or", fs, "false"),
            Formula::Not(f) => {
                out.push_str("(not ");
                f.write_smtlib(out, names);
                out.push(')');
            }
            Formula::Implies(a, b) => {
                out.push_str("(=> ");
                a.write_smtlib(out, names);
                out.push(' ');
                b.write_smtlib(out, names);
                out.push(')');
            }
        }
    }

    /// Full script: declarations followed by one assert.
    pub fn to_smtlib_script(&self, names: &[String]) -> String {
        let mut out = String::new();
        for n in names {
            let _ = writeln!(out, "(declare-const {n} Int)");
        }
        let _ = writeln!(out, "(assert {})", self.to_smtlib(names));
        out
    }
}

impl std::ops::Not for Formula {
    type Output = Formula;
    fn not(self) -> Formula {
        Formula::Not(Box::new(self))
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = default_names(self.min_dim());
        f.write_str(&self.to_smtlib(&names))
    }
}

/// `x0, x1, …`
pub fn default_names(dim: usize) -> Vec<String> {
    (0..dim).map(|i| format!("x{i}")).collect()
}

/// One conjunction of monadic bound atoms per cube, cubes sorted by
/// `(lo, hi)`. The empty union gives `0 ≤ -1`, an unconstrained cube `0 ≤ 0`.
pub fn cube_union_to_formula(u: &CubeUnion) -> Formula {
    if u.is_empty() {
        return Formula::ff();
    }
    let disjuncts = u
        .sorted()
        .cubes()
        .iter()
        .map(|c| {
            let mut atoms = Vec::new();
            for k in 0..c.dim() {
                if let Bound::Finite(lo) = c.lo()[k] {
                    atoms.push(Formula::Atom(LinearTerm::var(k), Rel::Ge, LinearTerm::constant(lo)));
                }
                if let Bound::Finite(hi) = c.hi()[k] {
                    atoms.push(Formula::Atom(LinearTerm::var(k), Rel::Le, LinearTerm::constant(hi)));
                }
            }
            if atoms.is_empty() {
                Formula::tt()
            } else {
                Formula::And(atoms)
            }
        })
        .collect();
    Formula::Or(disjuncts)
}
