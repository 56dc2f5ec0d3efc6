// The six benchmark families and a few harness cells.

use cubelearn::bench::{generate_benchmark, run_cell, BenchOptions, BenchmarkSpec, Family, CSV_HEADER};
use cubelearn::corner_search::SearchStrategy;
use cubelearn::learners::Algorithm;

fn main() -> cubelearn::Result<()> {
    for family in Family::ALL {
        let spec = BenchmarkSpec::new(family, if family == Family::CubesDimD { 3 } else { 4 });
        let p = generate_benchmark(spec)?;
        println!("{family} ({}): {}", spec.param, p.formula.to_smtlib(&p.names));
    }

    let opts = BenchOptions { deterministic: true, ..BenchOptions::default() };
    println!("\n{CSV_HEADER}");
    for (family, param) in [(Family::DiagonalRestricted, 6), (Family::BigCubes, 3), (Family::Implies, 5)] {
        for algorithm in [Algorithm::OvershootOptAddRemove, Algorithm::MaxCube] {
            let row = run_cell(BenchmarkSpec::new(family, param), algorithm, SearchStrategy::Binary, &opts);
            println!("{}", row.to_csv());
        }
    }
    Ok(())
}
