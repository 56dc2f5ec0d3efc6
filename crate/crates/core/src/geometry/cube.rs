use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{check_dim, Error, Result};

use super::bound::Bound;
use super::point::Point;

/// A nonempty axis-aligned box `{v | lo <= v <= hi}` over the integer lattice.
/// Bounds may be infinite: `lo[k]` may be `-inf`, `hi[k]` may be `+inf`.
///
/// Cubes order lexicographically by `(lo, hi)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawCube", into = "RawCube")]
pub struct Cube {
    lo: Vec<Bound>,
    hi: Vec<Bound>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCube {
    lo: Vec<Bound>,
    hi: Vec<Bound>,
}

impl TryFrom<RawCube> for Cube {
    type Error = Error;
    fn try_from(raw: RawCube) -> Result<Cube> {
        Cube::new(raw.lo, raw.hi)
    }
}

impl From<Cube> for RawCube {
    fn from(c: Cube) -> RawCube {
        RawCube { lo: c.lo, hi: c.hi }
    }
}

impl Cube {
    pub fn new(lo: Vec<Bound>, hi: Vec<Bound>) -> Result<Cube> {
        check_dim(lo.len(), hi.len())?;
        if lo.is_empty() {
            return Err(Error::InvalidCube("dimension must be at least 1".into()));
        }
        for (k, (l, h)) in lo.iter().zip(&hi).enumerate() {
            if *l == Bound::PosInf || *h == Bound::NegInf {
                return Err(Error::InvalidCube(format!(
                    "coordinate {k}: lower bound {l} / upper bound {h} on the wrong side"
                )));
            }
            if l > h {
                return Err(Error::InvalidCube(format!("coordinate {k}: {l} > {h}")));
            }
        }
        Ok(Cube { lo, hi })
    }

    pub fn finite(lo: &[i64], hi: &[i64]) -> Result<Cube> {
        Cube::new(lo.iter().map(|&x| Bound::Finite(x)).collect(), hi.iter().map(|&x| Bound::Finite(x)).collect())
    }

    /// `⟦lo, hi⟧` between two lattice points.
    pub fn from_corners(lo: &Point, hi: &Point) -> Result<Cube> {
        Cube::finite(lo.coords(), hi.coords())
    }

    pub fn unit(p: &Point) -> Cube {
        let b: Vec<Bound> = p.coords().iter().map(|&x| Bound::Finite(x)).collect();
        Cube { lo: b.clone(), hi: b }
    }

    /// The whole lattice.
    pub fn full(dim: usize) -> Cube {
        Cube { lo: vec![Bound::NegInf; dim], hi: vec![Bound::PosInf; dim] }
    }

    pub fn dim(&self) -> usize {
        self.lo.len()
    }

    pub fn lo(&self) -> &[Bound] {
        &self.lo
    }

    pub fn hi(&self) -> &[Bound] {
        &self.hi
    }

    pub fn is_finite(&self) -> bool {
        self.lo.iter().chain(&self.hi).all(|b| b.is_finite())
    }

    pub fn contains(&self, v: &Point) -> Result<bool> {
        check_dim(self.dim(), v.dim())?;
        Ok(self.contains_point(v))
    }

    #[inline]
    pub(crate) fn contains_point(&self, v: &Point) -> bool {
        v.coords().iter().enumerate().all(|(k, &x)| {
            let x = Bound::Finite(x);
            self.lo[k] <= x && x <= self.hi[k]
        })
    }

    pub fn contains_cube(&self, other: &Cube) -> Result<bool> {
        check_dim(self.dim(), other.dim())?;
        Ok((0..self.dim()).all(|k| self.lo[k] <= other.lo[k] && other.hi[k] <= self.hi[k]))
    }

    /// Component-wise max of the lows and min of the highs; `None` when empty.
    pub fn intersect(&self, other: &Cube) -> Result<Option<Cube>> {
        check_dim(self.dim(), other.dim())?;
        Ok(self.intersect_unchecked(other))
    }

    pub(crate) fn intersect_unchecked(&self, other: &Cube) -> Option<Cube> {
        let mut lo = Vec::with_capacity(self.dim());
        let mut hi = Vec::with_capacity(self.dim());
        for k in 0..self.dim() {
            let l = self.lo[k].max(other.lo[k]);
            let h = self.hi[k].min(other.hi[k]);
            if l > h {
                return None;
            }
            lo.push(l);
            hi.push(h);
        }
        Some(Cube { lo, hi })
    }

    /// `self \ other` as at most `2d` pairwise disjoint cubes.
    ///
    /// Slab decomposition: for each axis in turn, peel off the part of the
    /// remaining region below and above the intersection, then narrow the
    /// region to the intersection on that axis.
    pub fn subtract(&self, other: &Cube) -> Result<Vec<Cube>> {
        check_dim(self.dim(), other.dim())?;
        let Some(inner) = self.intersect_unchecked(other) else {
            return Ok(vec![self.clone()]);
        };
        let mut pieces = Vec::new();
        let mut rest = self.clone();
        for k in 0..self.dim() {
            if inner.lo[k] > rest.lo[k] {
                let mut below = rest.clone();
                below.hi[k] = inner.lo[k].checked_add(-1)?;
                pieces.push(below);
            }
            if inner.hi[k] < rest.hi[k] {
                let mut above = rest.clone();
                above.lo[k] = inner.hi[k].checked_add(1)?;
                pieces.push(above);
            }
            rest.lo[k] = inner.lo[k];
            rest.hi[k] = inner.hi[k];
        }
        Ok(pieces)
    }

    /// Restriction to the max-norm ball of radius `r`.
    pub fn clamp(&self, r: i64) -> Option<Cube> {
        let ball = Cube { lo: vec![Bound::Finite(-r); self.dim()], hi: vec![Bound::Finite(r); self.dim()] };
        self.intersect_unchecked(&ball)
    }

    /// The lower corner, if finite. For a finite cube it is also its
    /// lexicographically smallest point.
    pub fn lo_point(&self) -> Option<Point> {
        self.lo.iter().map(|b| b.finite()).collect::<Option<Vec<_>>>().map(Point::new)
    }

    pub fn hi_point(&self) -> Option<Point> {
        self.hi.iter().map(|b| b.finite()).collect::<Option<Vec<_>>>().map(Point::new)
    }

    /// Number of lattice points, `None` when infinite or beyond `u128`.
    pub fn volume(&self) -> Option<u128> {
        let mut v: u128 = 1;
        for k in 0..self.dim() {
            let (l, h) = (self.lo[k].finite()?, self.hi[k].finite()?);
            let side = (h as i128 - l as i128 + 1) as u128;
            v = v.checked_mul(side)?;
        }
        Some(v)
    }

    /// Enumerates the points of a finite cube in lexicographic order.
    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        let lo = self.lo_point();
        let hi = self.hi_point();
        let mut next = match (&lo, &hi) {
            (Some(l), Some(_)) => Some(l.clone()),
            _ => None,
        };
        std::iter::from_fn(move || {
            let current = next.take()?;
            let (lo, hi) = (lo.as_ref()?, hi.as_ref()?);
            let mut c = current.coords().to_vec();
            let mut k = c.len();
            loop {
                if k == 0 {
                    break;
                }
                k -= 1;
                if c[k] < hi[k] {
                    c[k] += 1;
                    next = Some(Point::new(c));
                    break;
                }
                c[k] = lo[k];
            }
            Some(current)
        })
    }

    pub fn with_hi(&self, axis: usize, b: Bound) -> Result<Cube> {
        let mut hi = self.hi.clone();
        hi[axis] = b;
        Cube::new(self.lo.clone(), hi)
    }

    pub fn with_lo(&self, axis: usize, b: Bound) -> Result<Cube> {
        let mut lo = self.lo.clone();
        lo[axis] = b;
        Cube::new(lo, self.hi.clone())
    }

    /// Sum of the bound sizes.
    pub fn size(&self) -> u64 {
        self.lo.iter().chain(&self.hi).map(|b| b.size()).sum()
    }
}

impl fmt::Display for Cube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[Bound]| v.iter().map(|b| b.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "[({}),({})]", join(&self.lo), join(&self.hi))
    }
}
