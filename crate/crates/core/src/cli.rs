//! Command-line front end: `learn`, `mondec` and `bench`.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::bench::{parse_param_range, run_suite, BenchOptions, BenchRow, Family, CSV_HEADER};
use crate::corner_search::SearchStrategy;
use crate::error::{Error, Result};
use crate::geometry::{CubeUnion, Point};
use crate::learners::{learn, Algorithm, LearnResult, LearnerConfig, QueryStats};
use crate::mondec::{monadic_decompose, parse_formula, SolverBackend};
use crate::oracles::{CexPolicy, GroundTruthTeacher};

#[derive(Parser, Debug)]
#[command(name = "cubelearn", version, about = "Learn unions of integer cubes and decompose LIA formulas")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Learn a cube union given as JSON from a ground-truth teacher.
    Learn(LearnArgs),
    /// Monadically decompose the formula asserted in an SMT-LIB2 file.
    Mondec(MondecArgs),
    /// Run a benchmark family and write query counts as CSV.
    Bench(BenchArgs),
}

#[derive(Args, Debug)]
pub struct LearnArgs {
    #[arg(long)]
    pub target: PathBuf,
    #[arg(long, default_value = "overshoot-addremove-opt")]
    pub algorithm: Algorithm,
    #[arg(long, default_value = "binary")]
    pub search: SearchStrategy,
    /// lex-min, min-corner or script:<file> (a JSON array of points).
    /// Defaults to min-corner for infinity-meq and lex-min otherwise.
    #[arg(long)]
    pub counterexample: Option<String>,
    /// Refinement budget; defaults to 10·(2n)^d for the target.
    #[arg(long)]
    pub max_iterations: Option<u64>,
    /// Disable infinite bounds for maxcube.
    #[arg(long)]
    pub finite_only: bool,
    #[arg(long)]
    pub trace: bool,
    #[arg(long)]
    pub timeout_ms: Option<u64>,
}

#[derive(Args, Debug)]
pub struct MondecArgs {
    #[arg(long)]
    pub formula: PathBuf,
    /// brute:LO:HI, smt:"CMD ARGS" or smt. Falls back to CUBELEARN_SOLVER_CMD.
    #[arg(long)]
    pub teacher: Option<SolverBackend>,
    #[arg(long, default_value = "maxcube")]
    pub algorithm: Algorithm,
    #[arg(long, default_value = "binary")]
    pub search: SearchStrategy,
    #[arg(long, default_value_t = 100_000)]
    pub max_iterations: u64,
    /// Writes `<out>.json` (cube union) and `<out>.smt2` (assertion).
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long)]
    pub timeout_ms: Option<u64>,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    #[arg(long)]
    pub suite: Family,
    /// START:STOP:STEP, inclusive.
    #[arg(long)]
    pub param: String,
    /// Rows are appended; the header is written when the file is new or empty.
    #[arg(long)]
    pub csv: PathBuf,
    #[arg(long)]
    pub timeout_ms: Option<u64>,
    /// Comma-separated; defaults to overshoot-addremove-opt,maxcube.
    #[arg(long, value_delimiter = ',')]
    pub algorithms: Vec<Algorithm>,
    /// Comma-separated; defaults to unary,binary,optimized.
    #[arg(long, value_delimiter = ',')]
    pub searches: Vec<SearchStrategy>,
    /// Overrides the family's brute-force box.
    #[arg(long)]
    pub teacher: Option<SolverBackend>,
    #[arg(long, default_value_t = 10_000)]
    pub max_iterations: u64,
    /// Report wall_ms as 0 so the CSV is byte-stable.
    #[arg(long)]
    pub deterministic: bool,
}

/// Parses `args` (program name first) and runs the command. Returns the
/// process exit status.
pub fn main_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return e.exit_code();
        }
    };
    let outcome = match &cli.command {
        Command::Learn(a) => run_learn(a, out),
        Command::Mondec(a) => run_mondec(a, out),
        Command::Bench(a) => run_bench(a, out, err),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn main() -> i32 {
    main_with(std::env::args_os(), &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

fn deadline(timeout_ms: Option<u64>) -> Option<Instant> {
    timeout_ms.map(|t| Instant::now() + Duration::from_millis(t))
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))
}

fn counterexample_policy(arg: Option<&str>, algorithm: Algorithm) -> Result<CexPolicy> {
    let arg = arg.unwrap_or(if algorithm == Algorithm::InfinityMeq { "min-corner" } else { "lex-min" });
    match arg {
        "lex-min" | "lexmin" => Ok(CexPolicy::LexMin),
        "min-corner" => Ok(CexPolicy::MinCorner),
        _ => match arg.strip_prefix("script:") {
            Some(file) => {
                let points: Vec<Point> = serde_json::from_str(&read(Path::new(file))?)?;
                Ok(CexPolicy::Script(points))
            }
            None => Err(Error::Config(format!("unknown counterexample policy '{arg}'"))),
        },
    }
}

#[derive(Serialize)]
struct LearnReport<'a> {
    algorithm: Algorithm,
    search: String,
    #[serde(flatten)]
    result: &'a LearnResult,
}

pub fn run_learn(args: &LearnArgs, out: &mut dyn Write) -> Result<i32> {
    let target: CubeUnion = serde_json::from_str(&read(&args.target)?)?;
    let policy = counterexample_policy(args.counterexample.as_deref(), args.algorithm)?;
    let teacher = GroundTruthTeacher::new(target, policy)?;
    let mut cfg = LearnerConfig::new(args.algorithm)
        .strategy(args.search)
        .max_iterations(args.max_iterations.unwrap_or_else(|| LearnerConfig::budget_for(teacher.target())))
        .record_trace(args.trace);
    if args.finite_only {
        cfg = cfg.allow_infinite(false);
    }
    if let Some(at) = deadline(args.timeout_ms) {
        cfg = cfg.deadline(at);
    }
    let mut result = learn(&teacher, &cfg)?;
    result.hypothesis = result.hypothesis.sorted();
    let report = LearnReport { algorithm: args.algorithm, search: args.search.to_string(), result: &result };
    serde_json::to_writer_pretty(&mut *out, &report)?;
    writeln!(out)?;
    Ok(0)
}

#[derive(Serialize)]
struct MondecReport<'a> {
    algorithm: Algorithm,
    search: String,
    teacher: String,
    variables: &'a [String],
    decomposition: &'a CubeUnion,
    smtlib: String,
    stats: &'a QueryStats,
    iterations: u64,
}

/// `out` with its extension replaced by `ext`.
fn sibling(out: &Path, ext: &str) -> PathBuf {
    match out.extension().and_then(|e| e.to_str()) {
        Some("json" | "smt2") => out.with_extension(ext),
        _ => {
            let mut s = out.as_os_str().to_owned();
            s.push(".");
            s.push(ext);
            PathBuf::from(s)
        }
    }
}

pub fn run_mondec(args: &MondecArgs, out: &mut dyn Write) -> Result<i32> {
    let parsed = parse_formula(&read(&args.formula)?)?;
    let teacher = match &args.teacher {
        Some(t) => t.clone(),
        None => SolverBackend::from_env()
            .ok_or_else(|| Error::Config(format!("no --teacher given and {} is not set", crate::mondec::SOLVER_ENV)))?,
    };
    let mut cfg = LearnerConfig::new(args.algorithm).strategy(args.search).max_iterations(args.max_iterations);
    if let Some(at) = deadline(args.timeout_ms) {
        cfg = cfg.deadline(at);
    }
    let d = monadic_decompose(&parsed.formula, parsed.dim(), &cfg, &teacher)?;
    let report = MondecReport {
        algorithm: args.algorithm,
        search: args.search.to_string(),
        teacher: teacher.to_string(),
        variables: &parsed.names,
        decomposition: &d.union,
        smtlib: d.formula.to_smtlib(&parsed.names),
        stats: &d.result.stats,
        iterations: d.result.iterations,
    };
    if let Some(path) = &args.output {
        fs::write(sibling(path, "json"), serde_json::to_string_pretty(&d.union)? + "\n")?;
        fs::write(sibling(path, "smt2"), d.formula.to_smtlib_script(&parsed.names))?;
    }
    serde_json::to_writer_pretty(&mut *out, &report)?;
    writeln!(out)?;
    Ok(0)
}

/// Exit status is 0 when every cell finished, otherwise that of the first
/// failing cell.
pub fn run_bench(args: &BenchArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let params = parse_param_range(&args.param)?;
    let defaults = BenchOptions::default();
    let opts = BenchOptions {
        algorithms: if args.algorithms.is_empty() { defaults.algorithms } else { args.algorithms.clone() },
        searches: if args.searches.is_empty() { defaults.searches } else { args.searches.clone() },
        teacher: args.teacher.clone(),
        timeout: args.timeout_ms.map(Duration::from_millis),
        max_iterations: args.max_iterations,
        deterministic: args.deterministic,
    };
    let fresh = fs::metadata(&args.csv).map(|m| m.len() == 0).unwrap_or(true);
    let mut csv = fs::OpenOptions::new().create(true).append(true).open(&args.csv)?;
    if fresh {
        writeln!(csv, "{CSV_HEADER}")?;
    }
    let rows = run_suite(args.suite, &params, &opts, &mut csv, |row: &BenchRow| {
        let _ = match &row.error {
            None => writeln!(
                out,
                "{} {} {} {}: {} eq, {} cubes",
                row.benchmark,
                row.param,
                row.algorithm,
                row.search,
                row.eq_queries.unwrap_or(0),
                row.cubes_out.unwrap_or(0)
            ),
            Some(e) => writeln!(err, "{} {} {} {}: {e}", row.benchmark, row.param, row.algorithm, row.search),
        };
    })?;
    Ok(rows.iter().map(|r| r.exit_code).find(|&c| c != 0).unwrap_or(0))
}
