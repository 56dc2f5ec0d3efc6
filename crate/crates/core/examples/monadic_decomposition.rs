// Monadic decomposition of `x ≥ 0 → (x + y ≥ 5 ∧ y ≥ 0)`.
//
// Uses the brute-force backend on [-20, 20]² unless CUBELEARN_SOLVER_CMD
// names an SMT solver (for example `z3 -in`).

use cubelearn::corner_search::SearchStrategy;
use cubelearn::learners::{Algorithm, LearnerConfig};
use cubelearn::mondec::{monadic_decompose, parse_formula, SolverBackend};

const FORMULA: &str = "
(set-logic QF_LIA)
(declare-const x Int)
(declare-const y Int)
(assert (=> (>= x 0) (and (>= (+ x y) 5) (>= y 0))))
(check-sat)
";

fn main() -> cubelearn::Result<()> {
    let parsed = parse_formula(FORMULA)?;
    let backend = SolverBackend::from_env().unwrap_or(SolverBackend::Brute { lo: -20, hi: 20 });
    println!("input:   {}", parsed.formula.to_smtlib(&parsed.names));
    println!("backend: {backend}");

    for algorithm in [Algorithm::MaxCube, Algorithm::InfinityMeq] {
        let cfg = LearnerConfig::new(algorithm).strategy(SearchStrategy::optimized());
        let d = monadic_decompose(&parsed.formula, parsed.dim(), &cfg, &backend)?;
        println!("\n{algorithm}: {} cubes after {} equivalence queries", d.union.len(), d.result.stats.equivalence);
        for c in d.union.cubes() {
            println!("  {c}");
        }
        println!("monadic: {}", d.formula.is_monadic());
        print!("{}", d.formula.to_smtlib_script(&parsed.names));
    }
    Ok(())
}
