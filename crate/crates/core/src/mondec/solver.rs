//! Satisfiability backends.
//!
//! * [`BruteSolver`] searches a finite box by interval branch and bound and
//!   returns the lexicographically smallest model in the box. It answers
//!   only relative to that box.
//! * [`ExternalSolver`] talks SMT-LIB2 to a solver process (for example
//!   `z3 -in`) over its standard input and output.

use std::fmt;
use std::io::{BufRead, BufReader, Write};
use std::process::{Child, ChildStdin, ChildStdout, Command, Stdio};
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::geometry::Point;

use super::formula::{default_names, Formula, Rel};

pub const SOLVER_ENV: &str = "CUBELEARN_SOLVER_CMD";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SatResult {
    Unsat,
    Sat(Point),
}

pub trait Solver {
    /// Checks `f` over variables `x0 … x{dim-1}`.
    fn check(&mut self, f: &Formula, dim: usize) -> Result<SatResult>;
}

/// Which backend to build, as given on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolverBackend {
    /// The box `[lo, hi]^d`.
    Brute {
        lo: i64,
        hi: i64,
    },
    External {
        program: String,
        args: Vec<String>,
    },
}

impl SolverBackend {
    pub fn instantiate(&self, dim: usize) -> Result<Box<dyn Solver>> {
        Ok(match self {
            SolverBackend::Brute { lo, hi } => Box::new(BruteSolver::cube(dim, *lo, *hi)?),
            SolverBackend::External { program, args } => Box::new(ExternalSolver::new(program, args.clone())),
        })
    }

    /// The external solver named by `CUBELEARN_SOLVER_CMD`, if set.
    pub fn from_env() -> Option<SolverBackend> {
        let cmd = std::env::var(SOLVER_ENV).ok()?;
        external_from_command(&cmd).ok()
    }
}

fn external_from_command(cmd: &str) -> Result<SolverBackend> {
    let mut words = cmd.split_whitespace().map(str::to_owned);
    let program = words.next().ok_or_else(|| Error::Config("empty solver command".into()))?;
    Ok(SolverBackend::External { program, args: words.collect() })
}

/// `brute:LO:HI`, `smt:"CMD ARGS"` or plain `smt` (command taken from
/// `CUBELEARN_SOLVER_CMD`).
impl FromStr for SolverBackend {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if let Some(range) = s.strip_prefix("brute:") {
            let (lo, hi) = range
                .split_once(':')
                .and_then(|(lo, hi)| Some((lo.trim().parse().ok()?, hi.trim().parse().ok()?)))
                .ok_or_else(|| Error::Config(format!("expected brute:LO:HI, got '{s}'")))?;
            if lo > hi {
                return Err(Error::Config(format!("empty brute-force box in '{s}'")));
            }
            return Ok(SolverBackend::Brute { lo, hi });
        }
        if s == "smt" {
            let cmd = std::env::var(SOLVER_ENV).map_err(|_| Error::Config(format!("{SOLVER_ENV} is not set")))?;
            return external_from_command(&cmd);
        }
        if let Some(cmd) = s.strip_prefix("smt:") {
            return external_from_command(cmd.trim().trim_matches('"'));
        }
        Err(Error::Config(format!("unknown teacher '{s}' (expected brute:LO:HI or smt:CMD)")))
    }
}

impl fmt::Display for SolverBackend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolverBackend::Brute { lo, hi } => write!(f, "brute:{lo}:{hi}"),
            SolverBackend::External { program, args } if args.is_empty() => write!(f, "smt:{program}"),
            SolverBackend::External { program, args } => write!(f, "smt:\"{program} {}\"", args.join(" ")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Truth {
    True,
    False,
    Unknown,
}

/// Normalized formula with atoms moved to `Σ c·x + k REL 0` form.
#[derive(Clone, Debug)]
enum Node {
    Atom { terms: Vec<(usize, i128)>, constant: i128, rel: Rel },
    And(Vec<Node>),
    Or(Vec<Node>),
}

impl Node {
    fn compile(f: &Formula) -> Result<Node> {
        Ok(match f {
            Formula::Atom(l, rel, r) => {
                let diff = l.sub(r)?;
                Node::Atom {
                    terms: diff.coeffs().iter().map(|(&i, &c)| (i, i128::from(c))).collect(),
                    constant: i128::from(diff.constant),
                    rel: *rel,
                }
            }
            Formula::And(fs) => Node::And(fs.iter().map(Node::compile).collect::<Result<_>>()?),
            Formula::Or(fs) => Node::Or(fs.iter().map(Node::compile).collect::<Result<_>>()?),
            Formula::Not(_) | Formula::Implies(..) => return Node::compile(&f.normalize()?),
        })
    }

    /// Restriction to the box: decided, or a smaller undecided node.
    fn restrict(&self, lo: &[i64], hi: &[i64]) -> (Truth, Option<Node>) {
        match self {
            Node::Atom { terms, constant, rel } => {
                let (mut min, mut max) = (*constant, *constant);
                for &(i, c) in terms {
                    let (a, b) = (c * i128::from(lo[i]), c * i128::from(hi[i]));
                    min += a.min(b);
                    max += a.max(b);
                }
                let t = match rel {
                    Rel::Le if max <= 0 => Truth::True,
                    Rel::Le if min > 0 => Truth::False,
                    Rel::Ge if min >= 0 => Truth::True,
                    Rel::Ge if max < 0 => Truth::False,
                    Rel::Eq if min == 0 && max == 0 => Truth::True,
                    Rel::Eq if min > 0 || max < 0 => Truth::False,
                    _ => Truth::Unknown,
                };
                (t, (t == Truth::Unknown).then(|| self.clone()))
            }
            Node::And(children) | Node::Or(children) => {
                let is_and = matches!(self, Node::And(_));
                let (absorbing, neutral) =
                    if is_and { (Truth::False, Truth::True) } else { (Truth::True, Truth::False) };
                let mut rest = Vec::new();
                for c in children {
                    match c.restrict(lo, hi) {
                        (t, _) if t == absorbing => return (absorbing, None),
                        (t, _) if t == neutral => {}
                        (_, node) => rest.push(node.expect("undecided child")),
                    }
                }
                match rest.len() {
                    0 => (neutral, None),
                    1 => (Truth::Unknown, rest.pop()),
                    _ => (Truth::Unknown, Some(if is_and { Node::And(rest) } else { Node::Or(rest) })),
                }
            }
        }
    }
}

/// Branch and bound over a finite box. Boxes are split on their first
/// non-singleton axis and the lower half is explored first, so the first
/// model found is the lexicographically smallest one in the box.
#[derive(Clone, Debug)]
pub struct BruteSolver {
    lo: Vec<i64>,
    hi: Vec<i64>,
    node_budget: u64,
}

impl BruteSolver {
    pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

    pub fn new(lo: Vec<i64>, hi: Vec<i64>) -> Result<Self> {
        if lo.len() != hi.len() || lo.iter().zip(&hi).any(|(a, b)| a > b) {
            return Err(Error::Config("brute-force box must have lo ≤ hi on every axis".into()));
        }
        Ok(BruteSolver { lo, hi, node_budget: Self::DEFAULT_NODE_BUDGET })
    }

    /// `[lo, hi]^dim`
    pub fn cube(dim: usize, lo: i64, hi: i64) -> Result<Self> {
        BruteSolver::new(vec![lo; dim], vec![hi; dim])
    }

    pub fn node_budget(mut self, n: u64) -> Self {
        self.node_budget = n;
        self
    }

    fn search(&self, node: &Node, lo: &mut [i64], hi: &mut [i64], visited: &mut u64) -> Result<Option<Point>> {
        *visited += 1;
        if *visited > self.node_budget {
            return Err(Error::EnumerationBudget(self.node_budget));
        }
        let (truth, rest) = node.restrict(lo, hi);
        let rest = match truth {
            Truth::False => return Ok(None),
            Truth::True => return Ok(Some(Point::new(lo.to_vec()))),
            Truth::Unknown => rest.expect("undecided node"),
        };
        let axis = (0..lo.len()).find(|&k| lo[k] < hi[k]).expect("a single point is always decided");
        let (l, h) = (lo[axis], hi[axis]);
        let mid = (i128::from(l) + (i128::from(h) - i128::from(l)) / 2) as i64;
        hi[axis] = mid;
        let found = self.search(&rest, lo, hi, visited)?;
        hi[axis] = h;
        if found.is_some() {
            return Ok(found);
        }
        lo[axis] = mid + 1;
        let found = self.search(&rest, lo, hi, visited)?;
        lo[axis] = l;
        Ok(found)
    }
}

impl Solver for BruteSolver {
    fn check(&mut self, f: &Formula, dim: usize) -> Result<SatResult> {
        if dim != self.lo.len() {
            return Err(Error::DimensionMismatch { expected: self.lo.len(), found: dim });
        }
        if f.min_dim() > dim {
            return Err(Error::DimensionMismatch { expected: dim, found: f.min_dim() });
        }
        let node = Node::compile(f)?;
        let (mut lo, mut hi) = (self.lo.clone(), self.hi.clone());
        let mut visited = 0;
        Ok(match self.search(&node, &mut lo, &mut hi, &mut visited)? {
            Some(p) => SatResult::Sat(p),
            None => SatResult::Unsat,
        })
    }
}

struct SolverProcess {
    child: Child,
    stdin: ChildStdin,
    stdout: BufReader<ChildStdout>,
}

/// One long-lived solver process; every query starts with `(reset)` so
/// queries are independent scripts.
pub struct ExternalSolver {
    program: String,
    args: Vec<String>,
    process: Option<SolverProcess>,
    queries: u64,
}

impl ExternalSolver {
    pub fn new(program: impl Into<String>, args: Vec<String>) -> Self {
        ExternalSolver { program: program.into(), args, process: None, queries: 0 }
    }

    pub fn queries(&self) -> u64 {
        self.queries
    }

    fn process(&mut self) -> Result<&mut SolverProcess> {
        if self.process.is_none() {
            let mut child = Command::new(&self.program)
                .args(&self.args)
                .stdin(Stdio::piped())
                .stdout(Stdio::piped())
                .stderr(Stdio::null())
                .spawn()
                .map_err(|e| Error::Solver(format!("cannot start '{}': {e}", self.program)))?;
            let stdin = child.stdin.take().expect("piped stdin");
            let stdout = BufReader::new(child.stdout.take().expect("piped stdout"));
            self.process = Some(SolverProcess { child, stdin, stdout });
        }
        Ok(self.process.as_mut().expect("spawned"))
    }

    fn send(&mut self, text: &str) -> Result<()> {
        let p = self.process()?;
        p.stdin
            .write_all(text.as_bytes())
            .and_then(|_| p.stdin.flush())
            .map_err(|e| Error::Solver(format!("write to solver failed: {e}")))
    }

    /// Reads one complete response: a bare word or a balanced s-expression.
    fn receive(&mut self) -> Result<String> {
        let p = self.process()?;
        let mut response = String::new();
        let mut depth = 0i64;
        loop {
            let mut line = String::new();
            let n =
                p.stdout.read_line(&mut line).map_err(|e| Error::Solver(format!("read from solver failed: {e}")))?;
            if n == 0 {
                return Err(Error::Solver("solver closed its output".into()));
            }
            for c in line.chars() {
                match c {
                    '(' => depth += 1,
                    ')' => depth -= 1,
                    _ => {}
                }
            }
            response.push_str(&line);
            if depth <= 0 && !response.trim().is_empty() {
                return Ok(response.trim().to_owned());
            }
        }
    }
}

impl Solver for ExternalSolver {
    fn check(&mut self, f: &Formula, dim: usize) -> Result<SatResult> {
        let names = default_names(dim);
        let mut script = String::new();
        if self.queries > 0 {
            script.push_str("(reset)\n");
        }
        script.push_str("(set-logic QF_LIA)\n");
        script.push_str(&f.to_smtlib_script(&names));
        script.push_str("(check-sat)\n");
        self.queries += 1;
        self.send(&script)?;
        let verdict = self.receive()?;
        match verdict.as_str() {
            "unsat" => return Ok(SatResult::Unsat),
            "unknown" => return Err(Error::SolverUnknown),
            "sat" => {}
            other => return Err(Error::Solver(format!("unexpected solver answer: {other}"))),
        }
        self.send(&format!("(get-value ({}))\n", names.join(" ")))?;
        let model = self.receive()?;
        parse_model(&model, &names).map(SatResult::Sat)
    }
}

impl Drop for ExternalSolver {
    fn drop(&mut self) {
        if let Some(mut p) = self.process.take() {
            let _ = p.stdin.write_all(b"(exit)\n").and_then(|_| p.stdin.flush());
            drop(p.stdin);
            let start = Instant::now();
            while start.elapsed() < Duration::from_millis(500) {
                if let Ok(Some(_)) = p.child.try_wait() {
                    return;
                }
                std::thread::sleep(Duration::from_millis(5));
            }
            let _ = p.child.kill();
            let _ = p.child.wait();
        }
    }
}

/// Parses `((x0 5) (x1 (- 3)))`.
fn parse_model(text: &str, names: &[String]) -> Result<Point> {
    let malformed = || Error::Solver(format!("malformed model: {text}"));
    let tokens: Vec<String> =
        text.replace('(', " ( ").replace(')', " ) ").split_whitespace().map(str::to_owned).collect();
    let mut values: Vec<Option<i64>> = vec![None; names.len()];
    let mut i = 0;
    let expect = |i: &mut usize, tok: &str| -> Result<()> {
        if tokens.get(*i).map(String::as_str) == Some(tok) {
            *i += 1;
            Ok(())
        } else {
            Err(malformed())
        }
    };
    expect(&mut i, "(")?;
    while tokens.get(i).map(String::as_str) == Some("(") {
        i += 1;
        let name = tokens.get(i).ok_or_else(malformed)?;
        let slot = names.iter().position(|n| n == name).ok_or_else(malformed)?;
        i += 1;
        let value = if tokens.get(i).map(String::as_str) == Some("(") {
            expect(&mut i, "(")?;
            expect(&mut i, "-")?;
            let v: i64 = tokens.get(i).and_then(|t| t.parse().ok()).ok_or_else(malformed)?;
            i += 1;
            expect(&mut i, ")")?;
            -v
        } else {
            let v: i64 = tokens.get(i).and_then(|t| t.parse().ok()).ok_or_else(malformed)?;
            i += 1;
            v
        };
        expect(&mut i, ")")?;
        values[slot] = Some(value);
    }
    expect(&mut i, ")")?;
    let coords: Option<Vec<i64>> = values.into_iter().collect();
    coords.map(Point::new).ok_or_else(malformed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mondec::parser::parse_formula;

    fn formula(text: &str) -> (usize, Formula) {
        let p = parse_formula(text).unwrap();
        (p.dim(), p.formula)
    }

    #[test]
    fn backend_parsing() {
        assert_eq!("brute:-20:20".parse::<SolverBackend>().unwrap(), SolverBackend::Brute { lo: -20, hi: 20 });
        assert_eq!(
            "smt:\"z3 -in\"".parse::<SolverBackend>().unwrap(),
            SolverBackend::External { program: "z3".into(), args: vec!["-in".into()] }
        );
        assert!("brute:5:1".parse::<SolverBackend>().is_err());
        assert!("cvc".parse::<SolverBackend>().is_err());
    }

    #[test]
    fn brute_unsat_and_lex_min() {
        let (d, f) = formula("(declare-const x Int)(assert (and (>= x 3) (<= x 1)))");
        assert_eq!(BruteSolver::cube(d, -10, 10).unwrap().check(&f, d).unwrap(), SatResult::Unsat);
        let (d, f) = formula("(declare-const x Int)(assert (>= x 3))");
        assert_eq!(BruteSolver::cube(d, -10, 10).unwrap().check(&f, d).unwrap(), SatResult::Sat(Point::from([3])));
    }

    #[test]
    fn brute_matches_enumeration() {
        let (d, f) = formula(
            "(declare-const x Int)(declare-const y Int)\
             (assert (or (and (= (+ x y) 7) (> x 2)) (and (<= (- x y) (- 9)) (>= y 4))))",
        );
        let mut solver = BruteSolver::cube(d, -12, 12).unwrap();
        let expected = (-12..=12).flat_map(|x| (-12..=12).map(move |y| Point::from([x, y]))).find(|p| f.eval(p));
        assert_eq!(solver.check(&f, d).unwrap(), SatResult::Sat(expected.unwrap()));
    }

    #[test]
    fn brute_budget() {
        let (d, f) = formula("(declare-const x Int)(declare-const y Int)(assert (= (* 2 x) (+ (* 2 y) 1)))");
        let mut solver = BruteSolver::cube(d, -1000, 1000).unwrap().node_budget(100);
        assert!(matches!(solver.check(&f, d), Err(Error::EnumerationBudget(100))));
    }

    #[test]
    fn model_parsing() {
        let names = default_names(2);
        assert_eq!(parse_model("((x0 5) (x1 (- 3)))", &names).unwrap(), Point::from([5, -3]));
        assert_eq!(parse_model("((x1 0)\n (x0 12))", &names).unwrap(), Point::from([12, 0]));
        assert!(parse_model("((x0 5))", &names).is_err());
        assert!(parse_model("((x0 five) (x1 1))", &names).is_err());
    }

    #[test]
    fn missing_solver_binary() {
        let (d, f) = formula("(declare-const x Int)(assert (>= x 3))");
        let mut s = ExternalSolver::new("/nonexistent/solver", vec![]);
        assert!(matches!(s.check(&f, d), Err(Error::Solver(_))));
    }
}
