use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{check_dim, Error, Result};

use super::bound::integer_size;

/// A point of the integer lattice. Ordering is lexicographic with the first
/// coordinate most significant, which is the tie-break used wherever a
/// deterministic "smallest" point is needed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point(Vec<i64>);

impl Point {
    /// Panics on an empty coordinate vector.
    pub fn new(coords: Vec<i64>) -> Point {
        assert!(!coords.is_empty(), "points have dimension >= 1");
        Point(coords)
    }

    pub fn origin(dim: usize) -> Point {
        Point::new(vec![0; dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.0
    }

    /// `self + delta * e_axis`
    pub fn offset(&self, axis: usize, delta: i64) -> Result<Point> {
        let mut c = self.0.clone();
        c[axis] = c[axis].checked_add(delta).ok_or(Error::Overflow)?;
        Ok(Point(c))
    }

    pub fn neg(&self) -> Result<Point> {
        self.0.iter().map(|x| x.checked_neg().ok_or(Error::Overflow)).collect::<Result<Vec<_>>>().map(Point)
    }

    pub fn sub(&self, other: &Point) -> Result<Point> {
        check_dim(self.dim(), other.dim())?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(Point)
    }

    /// Component-wise order.
    pub fn le(&self, other: &Point) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Max-norm.
    pub fn norm_inf(&self) -> u64 {
        self.0.iter().map(|x| x.unsigned_abs()).max().unwrap_or(0)
    }

    /// Sum of the binary sizes of the coordinates.
    pub fn size(&self) -> u64 {
        self.0.iter().map(|&x| integer_size(x)).sum()
    }
}

impl From<Vec<i64>> for Point {
    fn from(v: Vec<i64>) -> Self {
        Point::new(v)
    }
}

impl<const N: usize> From<[i64; N]> for Point {
    fn from(v: [i64; N]) -> Self {
        Point::new(v.to_vec())
    }
}

impl std::ops::Index<usize> for Point {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexicographic_order() {
        assert!(Point::from([0, 5]) < Point::from([1, 0]));
        assert!(Point::from([1, 0]) < Point::from([1, 1]));
    }

    #[test]
    fn component_order_is_partial() {
        let a = Point::from([0, 2]);
        let b = Point::from([1, 1]);
        assert!(!a.le(&b) && !b.le(&a));
        assert!(a.le(&Point::from([0, 3])));
    }

    #[test]
    fn arithmetic_overflow_is_reported() {
        let p = Point::from([i64::MAX]);
        assert!(matches!(p.offset(0, 1), Err(Error::Overflow)));
        assert!(matches!(Point::from([i64::MIN]).neg(), Err(Error::Overflow)));
    }
}
