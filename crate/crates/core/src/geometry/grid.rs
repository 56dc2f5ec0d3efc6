use std::collections::BTreeSet;

use crate::error::{Error, Result};

use super::bound::Bound;
use super::cube::Cube;
use super::point::Point;
use super::union::CubeUnion;

/// Per-coordinate sets of admissible lower and upper bounds derived from a
/// target representation `X = ⋃ ⟦lo_i, hi_i⟧`:
///
/// * lower set on axis `k`: `{hi_i[k] + 1} ∪ {lo_i[k]}`
/// * upper set on axis `k`: `{hi_i[k]} ∪ {lo_i[k] - 1}`
///
/// Cubes whose bounds all lie on the grid are closed under the union
/// operations, and the overshooting learners only ever build such cubes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbstractGrid {
    lower: Vec<BTreeSet<Bound>>,
    upper: Vec<BTreeSet<Bound>>,
}

impl AbstractGrid {
    pub fn of(target: &CubeUnion) -> Result<AbstractGrid> {
        if target.is_empty() {
            return Err(Error::Precondition("abstract grid of an empty target".into()));
        }
        let d = target.dim();
        let mut lower = vec![BTreeSet::new(); d];
        let mut upper = vec![BTreeSet::new(); d];
        for c in target.cubes() {
            for k in 0..d {
                let (lo, hi) = (c.lo()[k], c.hi()[k]);
                lower[k].insert(lo);
                upper[k].insert(hi);
                if hi != Bound::PosInf {
                    lower[k].insert(hi.checked_add(1)?);
                }
                if lo != Bound::NegInf {
                    upper[k].insert(lo.checked_add(-1)?);
                }
            }
        }
        Ok(AbstractGrid { lower, upper })
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self, axis: usize) -> &BTreeSet<Bound> {
        &self.lower[axis]
    }

    pub fn upper(&self, axis: usize) -> &BTreeSet<Bound> {
        &self.upper[axis]
    }

    pub fn contains_cube(&self, c: &Cube) -> bool {
        c.dim() == self.dim()
            && (0..self.dim()).all(|k| self.lower[k].contains(&c.lo()[k]) && self.upper[k].contains(&c.hi()[k]))
    }

    /// Every coordinate of `v` lies in the matching lower set.
    pub fn is_lower_point(&self, v: &Point) -> bool {
        v.dim() == self.dim() && v.coords().iter().enumerate().all(|(k, &x)| self.lower[k].contains(&Bound::Finite(x)))
    }

    pub fn contains_union(&self, u: &CubeUnion) -> bool {
        u.cubes().iter().all(|c| self.contains_cube(c))
    }

    /// Number of lattice points with every coordinate in the lower sets.
    pub fn lower_point_count(&self) -> u128 {
        self.lower.iter().map(|s| s.len() as u128).product()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fin(v: &[i64]) -> BTreeSet<Bound> {
        v.iter().map(|&x| Bound::Finite(x)).collect()
    }

    #[test]
    fn single_cube_grid() {
        let target = CubeUnion::single(Cube::finite(&[1, 1], &[3, 3]).unwrap());
        let g = AbstractGrid::of(&target).unwrap();
        assert_eq!(g.lower(0), &fin(&[1, 4]));
        assert_eq!(g.upper(0), &fin(&[3, 0]));
        assert!(g.contains_cube(&Cube::finite(&[1, 1], &[3, 3]).unwrap()));
        assert!(!g.contains_cube(&Cube::finite(&[2, 1], &[3, 3]).unwrap()));
        assert!(g.is_lower_point(&Point::from([4, 1])));
        assert!(!g.is_lower_point(&Point::from([3, 1])));
    }

    #[test]
    fn infinite_bounds_only_where_target_has_them() {
        let target = CubeUnion::single(
            Cube::new(vec![Bound::Finite(3), Bound::NegInf], vec![Bound::PosInf, Bound::Finite(0)]).unwrap(),
        );
        let g = AbstractGrid::of(&target).unwrap();
        assert_eq!(g.lower(0), &fin(&[3]));
        assert_eq!(g.upper(0), &[Bound::Finite(2), Bound::PosInf].into_iter().collect());
        assert_eq!(g.lower(1), &[Bound::NegInf, Bound::Finite(1)].into_iter().collect());
        assert!(!g.contains_cube(&Cube::full(2)));
    }

    #[test]
    fn empty_target_is_rejected() {
        assert!(AbstractGrid::of(&CubeUnion::empty(2)).is_err());
    }
}
