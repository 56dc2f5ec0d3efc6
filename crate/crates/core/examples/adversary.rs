// A corner oracle that makes optimized overshooting remove many cubes.
//
// The target is the two points 0 and (2, …, 2). The first corner pair
// spans both, so the learner adds the whole box and must then carve out
// everything else.

use cubelearn::learners::{learn_cubes_with, Algorithm, LearnerConfig};
use cubelearn::oracles::{CexPolicy, GroundTruthTeacher, ScriptedCorners};
use cubelearn::{Cube, CubeUnion, Point};

fn script(d: usize) -> Vec<(Point, Point)> {
    let twos = Point::new(vec![2; d]);
    let mut pairs = vec![(Point::origin(d), twos.clone())];
    // Slabs x_k = 1.
    for k in 0..d {
        let mut lo = vec![0; d];
        lo[k] = 1;
        let mut hi = vec![2; d];
        hi[k] = 1;
        pairs.push((Point::new(lo), Point::new(hi)));
    }
    // The leftover points with coordinates in {0, 2}, in lex order.
    for bits in 1..(1u32 << d) - 1 {
        let p = Point::new((0..d).map(|k| if bits >> (d - 1 - k) & 1 == 1 { 2 } else { 0 }).collect());
        pairs.push((p.clone(), p));
    }
    pairs
}

fn main() -> cubelearn::Result<()> {
    for d in [2, 3] {
        let twos = Point::new(vec![2; d]);
        let target = CubeUnion::from_cubes(d, vec![Cube::unit(&Point::origin(d)), Cube::unit(&twos)])?;
        let teacher = GroundTruthTeacher::new(target.clone(), CexPolicy::LexMin)?;
        let mut corners = ScriptedCorners::new(script(d));
        let cfg = LearnerConfig::new(Algorithm::OvershootOptAddRemove).record_trace(true);
        let out = learn_cubes_with(&teacher.membership(), &mut teacher.equivalence(), &mut corners, &cfg, &mut ())?;
        println!(
            "d = {d}: {} removals (2^d - 2 = {}), exact: {}",
            out.stats.removals,
            (1 << d) - 2,
            out.hypothesis.set_eq(&target)?
        );
        for step in out.trace.iter().flatten() {
            println!("  {:?} {}", step.kind, step.cube);
        }
    }
    Ok(())
}
