// Maximal cubes from subset queries, including unbounded ones.

use cubelearn::learners::{learn, Algorithm, LearnerConfig};
use cubelearn::oracles::{CexPolicy, GroundTruthTeacher};
use cubelearn::{Bound, Cube, CubeUnion};

fn main() -> cubelearn::Result<()> {
    // A vertical strip plus a box sticking out of it.
    let strip = Cube::new(vec![Bound::Finite(0), Bound::NegInf], vec![Bound::Finite(5), Bound::PosInf])?;
    let target = CubeUnion::from_cubes(2, vec![strip, Cube::finite(&[5, 0], &[9, 2])?])?;
    let teacher = GroundTruthTeacher::new(target.clone(), CexPolicy::LexMin)?;

    let cfg = LearnerConfig::new(Algorithm::MaxCube).record_trace(true);
    let out = learn(&teacher, &cfg)?;
    for step in out.trace.iter().flatten() {
        println!("counterexample {} grows into {}", step.counterexample, step.cube);
    }
    println!("exact: {}", out.hypothesis.set_eq(&target)?);
    println!(
        "{} subset queries, {} of them on {} unbounded directions",
        out.stats.subset, out.stats.unbounded_axis_subset, out.stats.unbounded_axes
    );

    // Without infinite bounds the same target cannot be learned.
    let finite = LearnerConfig::new(Algorithm::MaxCube).allow_infinite(false);
    println!("finite only: {}", learn(&teacher, &finite).unwrap_err());
    Ok(())
}
