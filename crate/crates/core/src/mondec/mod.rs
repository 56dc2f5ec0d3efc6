//! Monadic decomposition of linear integer arithmetic formulas.
//!
//! A formula over `x0 … x{d-1}` is monadically decomposable exactly when
//! its models form a finite union of (possibly unbounded) cubes, so the
//! cube learners can recover such a decomposition:
//!
//! * membership is formula evaluation,
//! * equivalence of `H` is satisfiability of `(φ_H ∧ ¬φ) ∨ (φ ∧ ¬φ_H)`,
//! * subset is unsatisfiability of `φ_H ∧ ¬φ`,
//!
//! where `φ_H` is the DNF of the hypothesis (see [`cube_union_to_formula`]).
//! Negation and implication are accepted on input and removed by
//! normalization, so the learners only see `≤`, `≥`, `=` atoms under `∧`/`∨`.

mod formula;
mod parser;
mod solver;

pub use formula::{cube_union_to_formula, default_names, Formula, LinearTerm, Rel};
pub use parser::{parse_formula, ParsedFormula};
pub use solver::{BruteSolver, ExternalSolver, SatResult, Solver, SolverBackend, SOLVER_ENV};

use crate::corner_search::{find_min_corner, SearchStrategy};
use crate::error::{check_dim, Error, Result};
use crate::geometry::{CubeUnion, Point};
use crate::learners::{run, Algorithm, LearnResult, LearnerConfig, Observer, Oracles};
use crate::oracles::{ball, symdiff, EquivalenceOracle, MembershipOracle, SubsetOracle};

/// Membership by evaluation.
#[derive(Clone, Debug)]
pub struct FormulaMembership {
    formula: Formula,
    dim: usize,
}

impl FormulaMembership {
    pub fn new(formula: Formula, dim: usize) -> Result<Self> {
        if formula.min_dim() > dim {
            return Err(Error::DimensionMismatch { expected: dim, found: formula.min_dim() });
        }
        Ok(FormulaMembership { formula, dim })
    }
}

impl MembershipOracle for FormulaMembership {
    fn dim(&self) -> usize {
        self.dim
    }
    fn member(&self, v: &Point) -> bool {
        self.formula.eval(v)
    }
}

/// Equivalence by one satisfiability check per query.
pub struct FormulaEquivalence {
    formula: Formula,
    negated: Formula,
    dim: usize,
    solver: Box<dyn Solver>,
    corners: bool,
}

impl FormulaEquivalence {
    pub fn new(formula: Formula, dim: usize, solver: Box<dyn Solver>) -> Result<Self> {
        let negated = formula.negate()?;
        Ok(FormulaEquivalence { formula: formula.normalize()?, negated, dim, solver, corners: false })
    }

    /// Descend each solver model to a local minimal corner of `H Δ X`
    /// before returning it. The descent evaluates the formula directly and
    /// issues no counted queries.
    pub fn with_corner_counterexamples(mut self) -> Self {
        self.corners = true;
        self
    }

    fn descend(&self, h: &CubeUnion, v: Point) -> Result<Point> {
        let m = self.formula.max_constant().max(h.max_finite_magnitude()).max(v.norm_inf());
        let radius = i64::try_from(m).ok().and_then(|m| m.checked_mul(2)?.checked_add(2)).ok_or(Error::Overflow)?;
        let phi = FormulaMembership { formula: self.formula.clone(), dim: self.dim };
        let set = ball(symdiff(&phi, h)?, radius)?;
        find_min_corner(&v, &set, SearchStrategy::Binary)
    }
}

impl EquivalenceOracle for FormulaEquivalence {
    fn dim(&self) -> usize {
        self.dim
    }

    fn equivalent(&mut self, h: &CubeUnion) -> Result<Option<Point>> {
        check_dim(self.dim, h.dim())?;
        let phi_h = cube_union_to_formula(h);
        let query = Formula::Or(vec![
            Formula::And(vec![phi_h.clone(), self.negated.clone()]),
            Formula::And(vec![self.formula.clone(), phi_h.negate()?]),
        ]);
        match self.solver.check(&query, self.dim)? {
            SatResult::Unsat => Ok(None),
            SatResult::Sat(v) if self.corners => self.descend(h, v).map(Some),
            SatResult::Sat(v) => Ok(Some(v)),
        }
    }

    fn yields_corners(&self) -> bool {
        self.corners
    }
}

/// Subset by unsatisfiability of `φ_H ∧ ¬φ`.
pub struct FormulaSubset {
    negated: Formula,
    dim: usize,
    solver: Box<dyn Solver>,
}

impl FormulaSubset {
    pub fn new(formula: &Formula, dim: usize, solver: Box<dyn Solver>) -> Result<Self> {
        Ok(FormulaSubset { negated: formula.negate()?, dim, solver })
    }
}

impl SubsetOracle for FormulaSubset {
    fn dim(&self) -> usize {
        self.dim
    }

    fn subset(&mut self, h: &CubeUnion) -> Result<bool> {
        check_dim(self.dim, h.dim())?;
        if h.is_empty() {
            return Ok(true);
        }
        let query = Formula::And(vec![cube_union_to_formula(h), self.negated.clone()]);
        Ok(self.solver.check(&query, self.dim)? == SatResult::Unsat)
    }
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub union: CubeUnion,
    /// DNF of `union`; every atom is monadic.
    pub formula: Formula,
    pub result: LearnResult,
}

/// Learns `f` as a union of cubes. Each oracle gets its own solver
/// instance from `backend`. A budget error means no decomposition was
/// found within `cfg.max_iterations` refinements; the input may not be
/// monadically decomposable.
pub fn monadic_decompose(
    f: &Formula,
    dim: usize,
    cfg: &LearnerConfig,
    backend: &SolverBackend,
) -> Result<Decomposition> {
    monadic_decompose_observed(f, dim, cfg, backend, &mut ())
}

pub fn monadic_decompose_observed(
    f: &Formula,
    dim: usize,
    cfg: &LearnerConfig,
    backend: &SolverBackend,
    observer: &mut dyn Observer,
) -> Result<Decomposition> {
    if dim == 0 {
        return Err(Error::Config("formula declares no variables".into()));
    }
    let f = f.normalize()?;
    let phi = FormulaMembership::new(f.clone(), dim)?;
    let mut psi = FormulaEquivalence::new(f.clone(), dim, backend.instantiate(dim)?)?;
    if cfg.algorithm == Algorithm::InfinityMeq {
        psi = psi.with_corner_counterexamples();
    }
    let mut rho = match cfg.algorithm {
        Algorithm::MaxCube => Some(FormulaSubset::new(&f, dim, backend.instantiate(dim)?)?),
        _ => None,
    };
    let result = run(
        Oracles {
            membership: Some(&phi),
            equivalence: &mut psi,
            subset: rho.as_mut().map(|r| r as &mut dyn SubsetOracle),
            corners: None,
        },
        cfg,
        observer,
    )?;
    let union = result.hypothesis.sorted();
    Ok(Decomposition { formula: cube_union_to_formula(&union), union, result })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{Bound, Cube};

    fn parsed(text: &str) -> ParsedFormula {
        parse_formula(text).unwrap()
    }

    const IMPLIES5: &str =
        "(declare-const x Int)(declare-const y Int)(assert (=> (>= x 0) (and (>= (+ x y) 5) (>= y 0))))";

    #[test]
    fn implies5_reference_check_is_unsat() {
        let p = parsed(IMPLIES5);
        let reference = parsed(
            "(declare-const x Int)(declare-const y Int)(assert (or (< x 0) \
             (and (>= x 0) (>= y 5)) (and (>= x 1) (>= y 4)) (and (>= x 2) (>= y 3)) \
             (and (>= x 3) (>= y 2)) (and (>= x 4) (>= y 1)) (and (>= x 5) (>= y 0))))",
        );
        let diff = Formula::Or(vec![
            Formula::And(vec![p.formula.clone(), reference.formula.negate().unwrap()]),
            Formula::And(vec![reference.formula.clone(), p.formula.negate().unwrap()]),
        ]);
        let mut solver = BruteSolver::cube(2, -20, 20).unwrap();
        assert_eq!(solver.check(&diff, 2).unwrap(), SatResult::Unsat);
    }

    #[test]
    fn already_monadic() {
        let p = parsed("(declare-const x Int)(assert (>= x 3))");
        let cfg = LearnerConfig::new(Algorithm::MaxCube);
        let out = monadic_decompose(&p.formula, 1, &cfg, &SolverBackend::Brute { lo: -50, hi: 50 }).unwrap();
        let expected = CubeUnion::single(Cube::new(vec![Bound::Finite(3)], vec![Bound::PosInf]).unwrap());
        assert_eq!(out.union, expected);
    }

    #[test]
    fn false_formula_gives_empty_union() {
        let cfg = LearnerConfig::new(Algorithm::OvershootOptAddRemove);
        let out = monadic_decompose(&Formula::ff(), 2, &cfg, &SolverBackend::Brute { lo: -5, hi: 5 }).unwrap();
        assert!(out.union.is_empty());
        assert_eq!(out.formula, Formula::ff());
    }

    #[test]
    fn implies5_with_maxcube() {
        let p = parsed(IMPLIES5);
        let cfg = LearnerConfig::new(Algorithm::MaxCube).strategy(SearchStrategy::optimized());
        let out = monadic_decompose(&p.formula, 2, &cfg, &SolverBackend::Brute { lo: -20, hi: 20 }).unwrap();
        assert!(out.formula.is_monadic());
        for x in -20..=20 {
            for y in -20..=20 {
                let v = Point::from([x, y]);
                assert_eq!(out.formula.eval(&v), p.formula.eval(&v), "{v}");
            }
        }
    }

    #[test]
    fn implies5_with_infinity_learner() {
        let p = parsed(IMPLIES5);
        let cfg = LearnerConfig::new(Algorithm::InfinityMeq);
        let out = monadic_decompose(&p.formula, 2, &cfg, &SolverBackend::Brute { lo: -20, hi: 20 }).unwrap();
        for x in -20..=20 {
            for y in -20..=20 {
                let v = Point::from([x, y]);
                assert_eq!(out.union.contains(&v).unwrap(), p.formula.eval(&v), "{v}");
            }
        }
    }
}
