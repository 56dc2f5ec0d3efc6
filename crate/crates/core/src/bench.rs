//! Benchmark families and the CSV harness.
//!
//! | family | param | formula over `x, y` (or `x0 … x{d-1}`) |
//! |---|---|---|
//! | `diagonal-restricted` (a) | K | `⋁_{i<K} (i ≤ x ≤ i+2 ∧ i ≤ y ≤ i+2) ∧ x + y ≤ K` |
//! | `cubes-dim-d` (b) | d | `⋁_{i<10} ⋀_k (i ≤ x_k ≤ i+2)` |
//! | `diagonal-unrestricted` (c) | K | `⋁_{i<K} (i ≤ x ≤ i+2 ∧ i ≤ y ≤ i+2) ∨ (x + y = K ∧ 0 ≤ x ≤ K)` |
//! | `big-cubes` (d) | K | `⋁_{i<K} (50i ≤ x ≤ 50i+100 ∧ 50i ≤ y ≤ 50i+100)` |
//! | `diagonal-points` (e) | K | `x = y ∧ 0 ≤ x ≤ K` |
//! | `implies` (f) | K | `x ≥ 0 → (x + y ≥ K ∧ y ≥ 0)` |

use std::fmt::{self, Write as _};
use std::io::Write;
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::corner_search::SearchStrategy;
use crate::error::{Error, Result};
use crate::learners::{Algorithm, LearnerConfig};
use crate::mondec::{monadic_decompose, parse_formula, ParsedFormula, SolverBackend};

pub const CSV_HEADER: &str =
    "benchmark,param,algorithm,search,eq_queries,mem_queries,sub_queries,refinements,cubes_out,wall_ms";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    DiagonalRestricted,
    CubesDimD,
    DiagonalUnrestricted,
    BigCubes,
    DiagonalPoints,
    Implies,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::DiagonalRestricted,
        Family::CubesDimD,
        Family::DiagonalUnrestricted,
        Family::BigCubes,
        Family::DiagonalPoints,
        Family::Implies,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::DiagonalRestricted => "diagonal-restricted",
            Family::CubesDimD => "cubes-dim-d",
            Family::DiagonalUnrestricted => "diagonal-unrestricted",
            Family::BigCubes => "big-cubes",
            Family::DiagonalPoints => "diagonal-points",
            Family::Implies => "implies",
        }
    }

    fn letter(self) -> &'static str {
        match self {
            Family::DiagonalRestricted => "a",
            Family::CubesDimD => "b",
            Family::DiagonalUnrestricted => "c",
            Family::BigCubes => "d",
            Family::DiagonalPoints => "e",
            Family::Implies => "f",
        }
    }

    /// Whether the target has unbounded cubes.
    pub fn is_unbounded(self) -> bool {
        self == Family::Implies
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Accepts the family names, underscores for dashes, `implies-k`, and the
/// letters `a` to `f`.
impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.to_ascii_lowercase().replace('_', "-");
        let norm = if norm == "implies-k" { "implies".to_owned() } else { norm };
        Family::ALL
            .into_iter()
            .find(|f| f.name() == norm || f.letter() == norm)
            .ok_or_else(|| Error::Config(format!("unknown benchmark family '{s}'")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BenchmarkSpec {
    pub family: Family,
    pub param: u32,
}

impl BenchmarkSpec {
    pub fn new(family: Family, param: u32) -> Self {
        BenchmarkSpec { family, param }
    }

    pub fn dim(&self) -> usize {
        match self.family {
            Family::CubesDimD => self.param as usize,
            _ => 2,
        }
    }

    /// A brute-force box holding every corner of the target with a margin.
    pub fn default_teacher(&self) -> SolverBackend {
        let k = i64::from(self.param);
        let (lo, hi) = match self.family {
            Family::DiagonalRestricted | Family::DiagonalUnrestricted => (-4, k + 6),
            Family::CubesDimD => (-4, 15),
            Family::BigCubes => (-4, 50 * k + 54),
            Family::DiagonalPoints => (-4, k + 4),
            Family::Implies => (-4 * k - 4, 4 * k + 4),
        };
        SolverBackend::Brute { lo, hi }
    }

    /// The benchmark as an SMT-LIB2 script.
    pub fn script(&self) -> Result<String> {
        if self.param == 0 {
            return Err(Error::Config(format!("{} needs a positive parameter", self.family)));
        }
        let k = self.param;
        let names: Vec<String> = match self.family {
            Family::CubesDimD => (0..k).map(|i| format!("x{i}")).collect(),
            _ => vec!["x".into(), "y".into()],
        };
        let stacked = |step: u32, width: u32, count: u32| {
            let mut s = String::from("(or");
            for i in 0..count {
                let (lo, hi) = (step * i, step * i + width);
                s.push_str(" (and");
                for n in &names {
                    let _ = write!(s, " (<= {lo} {n} {hi})");
                }
                s.push(')');
            }
            s.push(')');
            s
        };
        let body = match self.family {
            Family::DiagonalRestricted => format!("(and {} (<= (+ x y) {k}))", stacked(1, 2, k)),
            Family::CubesDimD => stacked(1, 2, 10),
            Family::DiagonalUnrestricted => format!("(or {} (and (= (+ x y) {k}) (<= 0 x {k})))", stacked(1, 2, k)),
            Family::BigCubes => stacked(50, 100, k),
            Family::DiagonalPoints => format!("(and (= x y) (<= 0 x {k}))"),
            Family::Implies => format!("(=> (>= x 0) (and (>= (+ x y) {k}) (>= y 0)))"),
        };
        let mut out = String::from("(set-logic QF_LIA)\n");
        for n in &names {
            let _ = writeln!(out, "(declare-const {n} Int)");
        }
        let _ = writeln!(out, "(assert {body})");
        out.push_str("(check-sat)\n");
        Ok(out)
    }
}

/// Dimension and normalized formula of a benchmark.
pub fn generate_benchmark(spec: BenchmarkSpec) -> Result<ParsedFormula> {
    parse_formula(&spec.script()?)
}

/// Query counts are `None` when the run did not finish; `wall_ms` is then
/// `-1` for a timeout and `-2` for any other failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchRow {
    pub benchmark: Family,
    pub param: u32,
    pub algorithm: Algorithm,
    pub search: SearchStrategy,
    pub eq_queries: Option<u64>,
    pub mem_queries: Option<u64>,
    pub sub_queries: Option<u64>,
    pub refinements: Option<u64>,
    pub cubes_out: Option<u64>,
    pub wall_ms: i64,
    pub error: Option<String>,
    pub exit_code: i32,
}

impl BenchRow {
    pub fn to_csv(&self) -> String {
        let opt = |v: Option<u64>| v.map(|v| v.to_string()).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.benchmark,
            self.param,
            self.algorithm,
            self.search,
            opt(self.eq_queries),
            opt(self.mem_queries),
            opt(self.sub_queries),
            opt(self.refinements),
            opt(self.cubes_out),
            self.wall_ms
        )
    }
}

#[derive(Clone, Debug)]
pub struct BenchOptions {
    pub algorithms: Vec<Algorithm>,
    pub searches: Vec<SearchStrategy>,
    /// Overrides the family's brute-force box.
    pub teacher: Option<SolverBackend>,
    pub timeout: Option<Duration>,
    pub max_iterations: u64,
    /// Writes `wall_ms` as 0 for finished cells, making the CSV byte-stable.
    pub deterministic: bool,
}

impl Default for BenchOptions {
    fn default() -> Self {
        BenchOptions {
            algorithms: vec![Algorithm::OvershootOptAddRemove, Algorithm::MaxCube],
            searches: SearchStrategy::all().to_vec(),
            teacher: None,
            timeout: None,
            max_iterations: 10_000,
            deterministic: false,
        }
    }
}

/// Runs one benchmark under one algorithm and search strategy.
pub fn run_cell(spec: BenchmarkSpec, algorithm: Algorithm, search: SearchStrategy, opts: &BenchOptions) -> BenchRow {
    let mut row = BenchRow {
        benchmark: spec.family,
        param: spec.param,
        algorithm,
        search,
        eq_queries: None,
        mem_queries: None,
        sub_queries: None,
        refinements: None,
        cubes_out: None,
        wall_ms: -2,
        error: None,
        exit_code: 0,
    };
    let start = Instant::now();
    let outcome = generate_benchmark(spec).and_then(|p| {
        let mut cfg = LearnerConfig::new(algorithm).strategy(search).max_iterations(opts.max_iterations);
        if let Some(t) = opts.timeout {
            cfg = cfg.deadline(start + t);
        }
        let teacher = opts.teacher.clone().unwrap_or_else(|| spec.default_teacher());
        monadic_decompose(&p.formula, p.dim(), &cfg, &teacher)
    });
    match outcome {
        Ok(d) => {
            let s = &d.result.stats;
            row.eq_queries = Some(s.equivalence);
            row.mem_queries = Some(s.membership);
            row.sub_queries = Some(s.subset);
            row.refinements = Some(s.refinements);
            row.cubes_out = Some(d.union.len() as u64);
            row.wall_ms = if opts.deterministic { 0 } else { start.elapsed().as_millis() as i64 };
        }
        Err(e) => {
            row.wall_ms = if matches!(e, Error::Timeout) { -1 } else { -2 };
            row.exit_code = e.exit_code();
            row.error = Some(e.to_string());
        }
    }
    row
}

/// Every `(param, algorithm, search)` cell in order, one CSV line each.
pub fn run_suite(
    family: Family,
    params: &[u32],
    opts: &BenchOptions,
    csv: &mut dyn Write,
    mut on_row: impl FnMut(&BenchRow),
) -> Result<Vec<BenchRow>> {
    let mut rows = Vec::new();
    for &param in params {
        for &algorithm in &opts.algorithms {
            for &search in &opts.searches {
                let row = run_cell(BenchmarkSpec::new(family, param), algorithm, search, opts);
                writeln!(csv, "{}", row.to_csv())?;
                on_row(&row);
                rows.push(row);
            }
        }
    }
    csv.flush()?;
    Ok(rows)
}

/// `start:stop:step` (inclusive), `start:stop` (step 1) or a single value.
pub fn parse_param_range(s: &str) -> Result<Vec<u32>> {
    let bad = || Error::Config(format!("expected START:STOP:STEP, got '{s}'"));
    let parts: Vec<u32> = s.split(':').map(|p| p.trim().parse().map_err(|_| bad())).collect::<Result<_>>()?;
    let (start, stop, step) = match parts[..] {
        [v] => (v, v, 1),
        [a, b] => (a, b, 1),
        [a, b, c] => (a, b, c),
        _ => return Err(bad()),
    };
    if step == 0 || start > stop {
        return Err(bad());
    }
    Ok((start..=stop).step_by(step as usize).collect())
}
