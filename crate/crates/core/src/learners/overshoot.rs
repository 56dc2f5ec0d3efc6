use crate::corner_search::SearchCorners;
use crate::error::{check_dim, Error, Result};
use crate::geometry::{Cube, Point};
use crate::oracles::{difference, exclusion, symdiff, CornerOracle, Counted, EquivalenceOracle, MembershipOracle};

use super::{LearnResult, LearnerConfig, Observer, QueryStats, RefinementKind, Session, VisitedCorners};

/// Overshooting learner from membership and equivalence queries, with
/// corners found by membership search.
pub fn learn_cubes(
    phi: &dyn MembershipOracle,
    psi: &mut dyn EquivalenceOracle,
    cfg: &LearnerConfig,
) -> Result<LearnResult> {
    let mut corners = SearchCorners { strategy: cfg.strategy, limits: cfg.limits };
    learn_cubes_with(phi, psi, &mut corners, cfg, &mut ())
}

pub fn learn_cubes_with(
    phi: &dyn MembershipOracle,
    psi: &mut dyn EquivalenceOracle,
    corners: &mut dyn CornerOracle,
    cfg: &LearnerConfig,
    observer: &mut dyn Observer,
) -> Result<LearnResult> {
    let algorithm = cfg.algorithm;
    if !algorithm.is_overshooting() {
        return Err(Error::Config(format!("{algorithm} is not an overshooting algorithm")));
    }
    check_dim(psi.dim(), phi.dim())?;
    let phi = Counted::new(phi);
    let mut corners = Counted::new(corners);
    let mut s = Session::new(psi.dim(), cfg, observer);
    while let Some(v) = s.counterexample(psi)? {
        let visited = algorithm.is_optimized().then_some(&mut s.visited);
        let (cube, kind) = if algorithm.is_symmetric() {
            let set = symdiff(&phi, &s.hypothesis)?;
            (corner_cube(&set, &v, &mut corners, &phi, &mut s.stats, visited)?, RefinementKind::Symdiff)
        } else if phi.member(&v) {
            let set = difference(&phi, &s.hypothesis)?;
            (corner_cube(&set, &v, &mut corners, &phi, &mut s.stats, visited)?, RefinementKind::Add)
        } else {
            let set = difference(&s.hypothesis, &phi)?;
            (corner_cube(&set, &v, &mut corners, &phi, &mut s.stats, visited)?, RefinementKind::Remove)
        };
        s.refine(v, cube, kind)?;
    }
    s.stats.membership = phi.count();
    s.stats.corner = corners.count();
    Ok(s.finish())
}

/// Minimal corner from `v`, then maximal corner. With `visited`, the max
/// search starts from the minimal corner and avoids the region above
/// visited corners, and the minimal corner is recorded.
pub(super) fn corner_cube<M>(
    set: &dyn MembershipOracle,
    v: &Point,
    corners: &mut dyn CornerOracle,
    phi: &Counted<M>,
    stats: &mut QueryStats,
    visited: Option<&mut VisitedCorners>,
) -> Result<Cube> {
    let before = phi.count();
    let lo = corners.min_corner(set, v)?;
    stats.min_corner_membership += phi.count() - before;

    let before = phi.count();
    let hi = match visited {
        Some(visited) => {
            if visited.contains(&lo) {
                return Err(Error::Protocol(format!("minimal corner {lo} visited twice")));
            }
            let hi = {
                let allowed = exclusion(set, visited.as_slice(), lo.clone())?;
                corners.max_corner(&allowed, &lo)?
            };
            visited.insert(lo.clone())?;
            hi
        }
        None => corners.max_corner(set, v)?,
    };
    stats.max_corner_membership += phi.count() - before;
    Cube::from_corners(&lo, &hi)
}
