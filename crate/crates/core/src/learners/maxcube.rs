use crate::corner_search::{find_max_inc_corner_counted, find_min_inc_corner_counted, AxisQueries};
use crate::error::{check_dim, Result};
use crate::geometry::{Bound, Cube};
use crate::oracles::{Counted, EquivalenceOracle, SubsetOracle};

use super::{LearnResult, LearnerConfig, Observer, QueryStats, RefinementKind, Session};

/// Maximal-cube learner from subset and equivalence queries. The hypothesis
/// only ever grows and stays inside the target; each counterexample is
/// grown into a cube that cannot be extended by one step on any face.
pub fn learn_max_cube(
    rho: &mut dyn SubsetOracle,
    psi: &mut dyn EquivalenceOracle,
    cfg: &LearnerConfig,
) -> Result<LearnResult> {
    learn_max_cube_with(rho, psi, cfg, &mut ())
}

pub fn learn_max_cube_with(
    rho: &mut dyn SubsetOracle,
    psi: &mut dyn EquivalenceOracle,
    cfg: &LearnerConfig,
    observer: &mut dyn Observer,
) -> Result<LearnResult> {
    check_dim(psi.dim(), rho.dim())?;
    let mut rho = Counted::new(rho);
    let mut s = Session::new(psi.dim(), cfg, observer);
    while let Some(v) = s.counterexample(psi)? {
        let start: Vec<Bound> = v.coords().iter().map(|&x| Bound::Finite(x)).collect();
        let (strategy, allow_infinite) = (s.cfg().strategy, s.cfg().allow_infinite);
        let (hi, q) = find_max_inc_corner_counted(&start, &start, &mut rho, strategy, allow_infinite)?;
        let n = tally(&mut s.stats, &q);
        s.stats.max_inc_subset += n;
        let (lo, q) = find_min_inc_corner_counted(&start, &hi, &mut rho, strategy, allow_infinite)?;
        let n = tally(&mut s.stats, &q);
        s.stats.min_inc_subset += n;
        s.refine(v, Cube::new(lo, hi)?, RefinementKind::Add)?;
    }
    s.stats.subset = rho.count();
    Ok(s.finish())
}

fn tally(stats: &mut QueryStats, q: &AxisQueries) -> u64 {
    for &axis in &q.unbounded {
        stats.unbounded_axes += 1;
        stats.unbounded_axis_subset += q.per_axis[axis];
    }
    q.per_axis.iter().sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corner_search::SearchStrategy;
    use crate::geometry::{CubeUnion, Point};
    use crate::learners::{learn, Algorithm};
    use crate::oracles::{CexPolicy, GroundTruthTeacher};

    fn cubes(d: usize, list: &[(&[i64], &[i64])]) -> CubeUnion {
        CubeUnion::from_cubes(d, list.iter().map(|(l, h)| Cube::finite(l, h).unwrap()).collect()).unwrap()
    }

    fn run(x: CubeUnion, policy: CexPolicy) -> LearnResult {
        let t = GroundTruthTeacher::new(x, policy).unwrap();
        learn(&t, &LearnerConfig::new(Algorithm::MaxCube).record_trace(true)).unwrap()
    }

    #[test]
    fn half_line() {
        let x = CubeUnion::single(Cube::new(vec![3.into()], vec![Bound::PosInf]).unwrap());
        let r = run(x.clone(), CexPolicy::LexMin);
        assert_eq!(r.hypothesis, x);
        assert_eq!(r.stats.refinements, 1);
        assert_eq!(r.stats.unbounded_axes, 1);
        assert_eq!(r.stats.unbounded_axis_subset, 1);
    }

    #[test]
    fn cross_learns_horizontal_bar_first() {
        let x = cubes(2, &[(&[0, 2], &[6, 4]), (&[2, 0], &[4, 6])]);
        let r = run(x.clone(), CexPolicy::Script(vec![Point::from([3, 3]), Point::from([3, 0])]));
        assert!(r.hypothesis.set_eq(&x).unwrap());
        assert_eq!(r.trace.unwrap()[0].cube, Cube::finite(&[0, 2], &[6, 4]).unwrap());
    }

    #[test]
    fn single_cube_one_refinement() {
        let r = run(cubes(3, &[(&[-4, 0, 7], &[9, 2, 7])]), CexPolicy::LexMin);
        assert_eq!(r.stats.refinements, 1);
        assert_eq!(r.stats.equivalence, 2);
    }

    #[test]
    fn strategies_agree() {
        let x = cubes(2, &[(&[0, 0], &[9, 4]), (&[0, 0], &[3, 9]), (&[20, -5], &[31, 0])]);
        for s in SearchStrategy::all() {
            let t = GroundTruthTeacher::new(x.clone(), CexPolicy::LexMin).unwrap();
            let r = learn(&t, &LearnerConfig::new(Algorithm::MaxCube).strategy(s)).unwrap();
            assert!(r.hypothesis.set_eq(&x).unwrap());
        }
    }
}
