use crate::corner_search::SearchCorners;
use crate::error::{check_dim, Error, Result};
use crate::geometry::{Bound, Cube, Point};
use crate::oracles::{ball, symdiff, CornerOracle, Counted, EquivalenceOracle, MembershipOracle};

use super::overshoot::corner_cube;
use super::{LearnResult, LearnerConfig, Observer, RefinementKind, Session};

/// Lower-corner clamp: coordinates on or beyond `-r` become `-∞`.
pub fn ext_lo(v: &Point, r: i64) -> Vec<Bound> {
    v.coords().iter().map(|&x| if x <= -r { Bound::NegInf } else { Bound::Finite(x) }).collect()
}

/// Upper-corner clamp: coordinates on or beyond `r` become `+∞`.
pub fn ext_hi(v: &Point, r: i64) -> Vec<Bound> {
    v.coords().iter().map(|&x| if x >= r { Bound::PosInf } else { Bound::Finite(x) }).collect()
}

/// Learner for targets with unbounded cubes from membership and equivalence
/// queries only. Corner searches run inside a ball of radius `r`, doubled
/// whenever a counterexample falls outside it; corners on the rim of the
/// ball are pushed to infinity. Needs an equivalence oracle whose
/// counterexamples are corners of `X Δ H`.
pub fn learn_cubes_infinity_meq(
    phi: &dyn MembershipOracle,
    psi: &mut dyn EquivalenceOracle,
    cfg: &LearnerConfig,
) -> Result<LearnResult> {
    let mut corners = SearchCorners { strategy: cfg.strategy, limits: cfg.limits };
    learn_cubes_infinity_meq_with(phi, psi, &mut corners, cfg, &mut ())
}

pub fn learn_cubes_infinity_meq_with(
    phi: &dyn MembershipOracle,
    psi: &mut dyn EquivalenceOracle,
    corners: &mut dyn CornerOracle,
    cfg: &LearnerConfig,
    observer: &mut dyn Observer,
) -> Result<LearnResult> {
    if !psi.yields_corners() {
        return Err(Error::Config("infinity-meq needs an equivalence oracle that returns corners".into()));
    }
    check_dim(psi.dim(), phi.dim())?;
    let phi = Counted::new(phi);
    let mut corners = Counted::new(corners);
    let mut s = Session::new(psi.dim(), cfg, observer);
    let mut r: i64 = 1;
    while let Some(v) = s.counterexample(psi)? {
        while v.norm_inf() > r as u64 {
            r = r.checked_mul(2).ok_or(Error::Overflow)?;
        }
        let cube = {
            let set = ball(symdiff(&phi, &s.hypothesis)?, r)?;
            let found = corner_cube(&set, &v, &mut corners, &phi, &mut s.stats, Some(&mut s.visited))?;
            let (lo, hi) = (found.lo_point().expect("finite"), found.hi_point().expect("finite"));
            Cube::new(ext_lo(&lo, r), ext_hi(&hi, r))?
        };
        s.refine(v, cube, RefinementKind::Symdiff)?;
    }
    s.stats.membership = phi.count();
    s.stats.corner = corners.count();
    Ok(s.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::CubeUnion;
    use crate::learners::{learn, Algorithm};
    use crate::oracles::{CexPolicy, GroundTruthTeacher};

    fn learn_with(x: &CubeUnion, policy: CexPolicy) -> Result<LearnResult> {
        let t = GroundTruthTeacher::new(x.clone(), policy).unwrap();
        learn(&t, &LearnerConfig::new(Algorithm::InfinityMeq))
    }

    #[test]
    fn ext_clamps_outward() {
        let v = Point::from([5, -9]);
        assert_eq!(ext_lo(&v, 8), vec![Bound::Finite(5), Bound::NegInf]);
        assert_eq!(ext_hi(&v, 8), vec![Bound::Finite(5), Bound::Finite(-9)]);
        assert_eq!(ext_hi(&Point::from([8]), 8), vec![Bound::PosInf]);
    }

    #[test]
    fn half_line() {
        let x = CubeUnion::single(Cube::new(vec![3.into()], vec![Bound::PosInf]).unwrap());
        let r = learn_with(&x, CexPolicy::MinCorner).unwrap();
        assert_eq!(r.hypothesis, x);
    }

    #[test]
    fn vertical_strip() {
        let x = CubeUnion::single(Cube::new(vec![0.into(), Bound::NegInf], vec![5.into(), Bound::PosInf]).unwrap());
        let r = learn_with(&x, CexPolicy::MinCorner).unwrap();
        assert!(r.hypothesis.set_eq(&x).unwrap());
    }

    #[test]
    fn finite_target() {
        let x = CubeUnion::from_cubes(
            2,
            vec![Cube::finite(&[0, 0], &[4, 1]).unwrap(), Cube::finite(&[0, 0], &[1, 4]).unwrap()],
        )
        .unwrap();
        let r = learn_with(&x, CexPolicy::MinCorner).unwrap();
        assert!(r.hypothesis.set_eq(&x).unwrap());
    }

    #[test]
    fn requires_corner_counterexamples() {
        let x = CubeUnion::single(Cube::finite(&[0], &[1]).unwrap());
        assert!(matches!(learn_with(&x, CexPolicy::LexMin), Err(Error::Config(_))));
    }
}
