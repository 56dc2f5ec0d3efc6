// Unbounded targets from membership and corner counterexamples only.

use cubelearn::learners::{learn, Algorithm, LearnerConfig};
use cubelearn::oracles::{CexPolicy, GroundTruthTeacher};
use cubelearn::{Bound, Cube, CubeUnion};

fn main() -> cubelearn::Result<()> {
    let targets = [
        CubeUnion::single(Cube::new(vec![Bound::Finite(3)], vec![Bound::PosInf])?),
        CubeUnion::single(Cube::new(vec![Bound::Finite(0), Bound::NegInf], vec![Bound::Finite(5), Bound::PosInf])?),
        CubeUnion::from_cubes(
            2,
            vec![
                Cube::new(vec![Bound::NegInf, Bound::NegInf], vec![Bound::Finite(-1), Bound::PosInf])?,
                Cube::new(vec![Bound::Finite(2), Bound::Finite(3)], vec![Bound::PosInf, Bound::PosInf])?,
            ],
        )?,
    ];
    let cfg = LearnerConfig::new(Algorithm::InfinityMeq);
    for target in &targets {
        // Counterexamples must be minimal corners of the difference.
        let teacher = GroundTruthTeacher::new(target.clone(), CexPolicy::MinCorner)?;
        let out = learn(&teacher, &cfg)?;
        println!("{target}");
        println!("  learned {} in {} eq / {} mem", out.hypothesis, out.stats.equivalence, out.stats.membership);
        assert!(out.hypothesis.set_eq(target)?);
    }

    let lex = GroundTruthTeacher::new(targets[0].clone(), CexPolicy::LexMin)?;
    println!("lex-min teacher: {}", learn(&lex, &cfg).unwrap_err());
    Ok(())
}
