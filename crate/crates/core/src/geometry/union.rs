use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{check_dim, Error, Result};

use super::bound::Bound;
use super::cube::Cube;
use super::point::Point;

/// Set operation applied to a union with a single cube operand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum UnionOp {
    Add,
    Remove,
    Symdiff,
}

/// A finite union of cubes of a common dimension.
///
/// Unions produced by the set operations are kept in canonical disjoint form
/// (pairwise disjoint pieces). Unions read from input keep their given
/// representation until an operation canonicalizes them, so that
/// [`CubeUnion::representation_size`] measures what the user supplied.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawUnion", into = "RawUnion")]
pub struct CubeUnion {
    dim: usize,
    cubes: Vec<Cube>,
    disjoint: bool,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawUnion {
    dim: usize,
    cubes: Vec<Cube>,
}

impl TryFrom<RawUnion> for CubeUnion {
    type Error = Error;
    fn try_from(raw: RawUnion) -> Result<CubeUnion> {
        CubeUnion::from_cubes(raw.dim, raw.cubes)
    }
}

impl From<CubeUnion> for RawUnion {
    fn from(u: CubeUnion) -> RawUnion {
        RawUnion { dim: u.dim, cubes: u.cubes }
    }
}

impl CubeUnion {
    pub fn empty(dim: usize) -> CubeUnion {
        assert!(dim >= 1, "unions have dimension >= 1");
        CubeUnion { dim, cubes: Vec::new(), disjoint: true }
    }

    /// Wraps a representation as given; it is not assumed disjoint.
    pub fn from_cubes(dim: usize, cubes: Vec<Cube>) -> Result<CubeUnion> {
        if dim == 0 {
            return Err(Error::InvalidCube("dimension must be at least 1".into()));
        }
        for c in &cubes {
            check_dim(dim, c.dim())?;
        }
        let disjoint = cubes.len() <= 1;
        Ok(CubeUnion { dim, cubes, disjoint })
    }

    pub fn single(cube: Cube) -> CubeUnion {
        CubeUnion { dim: cube.dim(), cubes: vec![cube], disjoint: true }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cubes(&self) -> &[Cube] {
        &self.cubes
    }

    pub fn len(&self) -> usize {
        self.cubes.len()
    }

    /// True when the representation has no cubes, i.e. the set is empty.
    pub fn is_empty(&self) -> bool {
        self.cubes.is_empty()
    }

    pub fn is_canonical_disjoint(&self) -> bool {
        self.disjoint
    }

    pub fn is_finite(&self) -> bool {
        self.cubes.iter().all(Cube::is_finite)
    }

    /// The same set in canonical disjoint form.
    pub fn canonical(&self) -> Result<CubeUnion> {
        if self.disjoint {
            return Ok(self.clone());
        }
        let mut out = CubeUnion::empty(self.dim);
        for c in &self.cubes {
            out = out.add(c)?;
        }
        Ok(out)
    }

    pub fn apply(&self, op: UnionOp, c: &Cube) -> Result<CubeUnion> {
        check_dim(self.dim, c.dim())?;
        let base = self.canonical()?;
        match op {
            UnionOp::Add => base.add_disjoint(c),
            UnionOp::Remove => base.remove_disjoint(c),
            UnionOp::Symdiff => base.symdiff_disjoint(c),
        }
    }

    pub fn add(&self, c: &Cube) -> Result<CubeUnion> {
        self.apply(UnionOp::Add, c)
    }

    pub fn remove(&self, c: &Cube) -> Result<CubeUnion> {
        self.apply(UnionOp::Remove, c)
    }

    pub fn symdiff(&self, c: &Cube) -> Result<CubeUnion> {
        self.apply(UnionOp::Symdiff, c)
    }

    fn remove_disjoint(&self, c: &Cube) -> Result<CubeUnion> {
        let mut cubes = Vec::with_capacity(self.cubes.len());
        for piece in &self.cubes {
            cubes.extend(piece.subtract(c)?);
        }
        Ok(CubeUnion { dim: self.dim, cubes, disjoint: true })
    }

    fn add_disjoint(&self, c: &Cube) -> Result<CubeUnion> {
        let mut out = self.remove_disjoint(c)?;
        out.cubes.push(c.clone());
        Ok(out)
    }

    fn symdiff_disjoint(&self, c: &Cube) -> Result<CubeUnion> {
        // c \ self, piece by piece
        let mut outside = vec![c.clone()];
        for piece in &self.cubes {
            let mut next = Vec::with_capacity(outside.len());
            for o in &outside {
                next.extend(o.subtract(piece)?);
            }
            outside = next;
            if outside.is_empty() {
                break;
            }
        }
        let mut out = self.remove_disjoint(c)?;
        out.cubes.extend(outside);
        Ok(out)
    }

    pub fn contains(&self, v: &Point) -> Result<bool> {
        check_dim(self.dim, v.dim())?;
        Ok(self.contains_point(v))
    }

    #[inline]
    pub(crate) fn contains_point(&self, v: &Point) -> bool {
        self.cubes.iter().any(|c| c.contains_point(v))
    }

    pub fn union(&self, other: &CubeUnion) -> Result<CubeUnion> {
        check_dim(self.dim, other.dim)?;
        let mut out = self.canonical()?;
        for c in &other.canonical()?.cubes {
            out = out.add_disjoint(c)?;
        }
        Ok(out)
    }

    pub fn difference(&self, other: &CubeUnion) -> Result<CubeUnion> {
        check_dim(self.dim, other.dim)?;
        let mut out = self.canonical()?;
        for c in &other.cubes {
            out = out.remove_disjoint(c)?;
            if out.is_empty() {
                break;
            }
        }
        Ok(out)
    }

    pub fn intersection(&self, other: &CubeUnion) -> Result<CubeUnion> {
        check_dim(self.dim, other.dim)?;
        let (a, b) = (self.canonical()?, other.canonical()?);
        let cubes = a.cubes.iter().flat_map(|x| b.cubes.iter().filter_map(move |y| x.intersect_unchecked(y))).collect();
        Ok(CubeUnion { dim: self.dim, cubes, disjoint: true })
    }

    pub fn symmetric_difference(&self, other: &CubeUnion) -> Result<CubeUnion> {
        let mut out = self.difference(other)?;
        out.cubes.extend(other.difference(self)?.cubes);
        Ok(out)
    }

    pub fn is_subset_of(&self, other: &CubeUnion) -> Result<bool> {
        Ok(self.difference(other)?.is_empty())
    }

    pub fn set_eq(&self, other: &CubeUnion) -> Result<bool> {
        Ok(self.symmetric_difference(other)?.is_empty())
    }

    /// Largest finite bound magnitude over all cubes (0 if none).
    pub fn max_finite_magnitude(&self) -> u64 {
        self.cubes
            .iter()
            .flat_map(|c| c.lo().iter().chain(c.hi()))
            .filter_map(|b| b.finite())
            .map(|x| x.unsigned_abs())
            .max()
            .unwrap_or(0)
    }

    /// A point of `self Δ other`, or `None` when the sets are equal.
    ///
    /// Unbounded pieces are clamped to the ball of radius one beyond the
    /// largest finite magnitude of either union; every nonempty cell of the
    /// arrangement meets that ball. The lexicographically smallest point of
    /// the clamped difference is returned.
    pub fn difference_witness(&self, other: &CubeUnion) -> Result<Option<Point>> {
        let diff = self.symmetric_difference(other)?;
        if diff.is_empty() {
            return Ok(None);
        }
        let m = self.max_finite_magnitude().max(other.max_finite_magnitude());
        let r = i64::try_from(m).ok().and_then(|m| m.checked_add(1)).ok_or(Error::Overflow)?;
        Ok(diff.cubes.iter().filter_map(|c| c.clamp(r)).filter_map(|c| c.lo_point()).min())
    }

    /// Sum of the binary sizes of every bound of the given representation.
    pub fn representation_size(&self) -> u64 {
        self.cubes.iter().map(Cube::size).sum()
    }

    /// Cubes sorted by `(lo, hi)`.
    pub fn sorted(&self) -> CubeUnion {
        let mut cubes = self.cubes.clone();
        cubes.sort();
        CubeUnion { dim: self.dim, cubes, disjoint: self.disjoint }
    }

    /// Number of lattice points; `None` when infinite.
    pub fn volume(&self) -> Option<u128> {
        let c = self.canonical().ok()?;
        c.cubes.iter().try_fold(0u128, |acc, c| acc.checked_add(c.volume()?))
    }

    /// Smallest finite box containing the union, if it is bounded.
    pub fn bounding_box(&self) -> Option<Cube> {
        let first = self.cubes.first()?;
        let mut lo = first.lo().to_vec();
        let mut hi = first.hi().to_vec();
        for c in &self.cubes[1..] {
            for k in 0..self.dim {
                lo[k] = lo[k].min(c.lo()[k]);
                hi[k] = hi[k].max(c.hi()[k]);
            }
        }
        if lo.iter().chain(&hi).any(|b| !b.is_finite()) {
            return None;
        }
        Cube::new(lo, hi).ok()
    }
}

impl fmt::Display for CubeUnion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cubes.is_empty() {
            return f.write_str("{}");
        }
        let parts: Vec<String> = self.cubes.iter().map(|c| c.to_string()).collect();
        write!(f, "{{{}}}", parts.join(" ∪ "))
    }
}

/// `⟦lo, hi⟧` in one dimension, mostly for tests and examples.
pub fn interval(lo: Bound, hi: Bound) -> Result<Cube> {
    Cube::new(vec![lo], vec![hi])
}
