// The four overshooting learners on a small target.

use cubelearn::learners::{learn, Algorithm, LearnerConfig};
use cubelearn::oracles::{CexPolicy, GroundTruthTeacher};
use cubelearn::{Cube, CubeUnion};

fn main() -> cubelearn::Result<()> {
    let target = CubeUnion::from_cubes(2, vec![Cube::finite(&[0, 0], &[3, 3])?, Cube::finite(&[2, 2], &[6, 5])?])?;
    let teacher = GroundTruthTeacher::new(target.clone(), CexPolicy::LexMin)?;
    println!("target: {target}");
    println!("bound (2n)^d = {}", 4u64.pow(2));

    for algorithm in Algorithm::ALL.into_iter().filter(|a| a.is_overshooting()) {
        let cfg = LearnerConfig::new(algorithm).record_trace(true);
        let out = learn(&teacher, &cfg)?;
        assert!(out.hypothesis.set_eq(&target)?);
        let s = &out.stats;
        println!("{algorithm:<26} eq {:>2}  mem {:>4}  +{} -{}", s.equivalence, s.membership, s.additions, s.removals);
        for step in out.trace.iter().flatten() {
            println!("    {:?} {} at {}", step.kind, step.cube, step.counterexample);
        }
    }
    Ok(())
}
