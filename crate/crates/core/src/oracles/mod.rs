//! Oracle interfaces and teachers.
//!
//! * [`MembershipOracle`]: point → bool
//! * [`EquivalenceOracle`]: hypothesis → counterexample or done
//! * [`SubsetOracle`]: hypothesis → is it contained in the target
//! * [`CornerOracle`]: point of a set → local minimal / maximal corner of it
//!
//! Membership oracles compose (see [`compose`]); learners build the oracle
//! for sets such as `X Δ H` or `X \ H` from the teacher's oracle for `X` and
//! their own hypothesis, which is itself a membership oracle.

use std::cell::Cell;

use crate::error::Result;
use crate::geometry::{Cube, CubeUnion, Point};

pub mod compose;
mod scripted;
mod teacher;

pub use compose::{
    ball, difference, exclusion, intersect, negate, symdiff, translate, union, Ball, Difference, Exclusion,
    FnMembership, Intersect, Negate, SymDiff, Translate, Union,
};
pub use scripted::ScriptedCorners;
pub use teacher::{CexPolicy, GroundTruthTeacher, TargetEquivalence, TargetMembership, TargetSubset};

pub trait MembershipOracle {
    fn dim(&self) -> usize;
    fn member(&self, v: &Point) -> bool;
}

pub trait EquivalenceOracle {
    fn dim(&self) -> usize;

    /// `Ok(None)` when `h` equals the target, otherwise a point of `h Δ X`.
    fn equivalent(&mut self, h: &CubeUnion) -> Result<Option<Point>>;

    /// Whether every counterexample is a corner of `h Δ X`. The learner for
    /// unbounded targets from membership and equivalence queries needs this.
    fn yields_corners(&self) -> bool {
        false
    }
}

pub trait SubsetOracle {
    fn dim(&self) -> usize;
    fn subset(&mut self, h: &CubeUnion) -> Result<bool>;
}

/// Finds corners of a set given by a membership oracle, starting from one of
/// its points. A corner here is local: `v` in the set and no unit step
/// `v ± e_i` (downward for minimal, upward for maximal) stays in it.
pub trait CornerOracle {
    fn min_corner(&mut self, set: &dyn MembershipOracle, from: &Point) -> Result<Point>;
    fn max_corner(&mut self, set: &dyn MembershipOracle, from: &Point) -> Result<Point>;
}

impl<M: MembershipOracle + ?Sized> MembershipOracle for &M {
    fn dim(&self) -> usize {
        (**self).dim()
    }
    fn member(&self, v: &Point) -> bool {
        (**self).member(v)
    }
}

impl<M: MembershipOracle + ?Sized> MembershipOracle for Box<M> {
    fn dim(&self) -> usize {
        (**self).dim()
    }
    fn member(&self, v: &Point) -> bool {
        (**self).member(v)
    }
}

impl<E: EquivalenceOracle + ?Sized> EquivalenceOracle for &mut E {
    fn dim(&self) -> usize {
        (**self).dim()
    }
    fn equivalent(&mut self, h: &CubeUnion) -> Result<Option<Point>> {
        (**self).equivalent(h)
    }
    fn yields_corners(&self) -> bool {
        (**self).yields_corners()
    }
}

impl<S: SubsetOracle + ?Sized> SubsetOracle for &mut S {
    fn dim(&self) -> usize {
        (**self).dim()
    }
    fn subset(&mut self, h: &CubeUnion) -> Result<bool> {
        (**self).subset(h)
    }
}

impl<C: CornerOracle + ?Sized> CornerOracle for &mut C {
    fn min_corner(&mut self, set: &dyn MembershipOracle, from: &Point) -> Result<Point> {
        (**self).min_corner(set, from)
    }
    fn max_corner(&mut self, set: &dyn MembershipOracle, from: &Point) -> Result<Point> {
        (**self).max_corner(set, from)
    }
}

/// A known union answers membership locally, without counting.
impl MembershipOracle for CubeUnion {
    fn dim(&self) -> usize {
        CubeUnion::dim(self)
    }
    fn member(&self, v: &Point) -> bool {
        self.contains_point(v)
    }
}

impl MembershipOracle for Cube {
    fn dim(&self) -> usize {
        Cube::dim(self)
    }
    fn member(&self, v: &Point) -> bool {
        self.contains_point(v)
    }
}

/// Counts every query forwarded to the wrapped oracle.
#[derive(Debug)]
pub struct Counted<O> {
    inner: O,
    count: Cell<u64>,
}

impl<O> Counted<O> {
    pub fn new(inner: O) -> Self {
        Counted { inner, count: Cell::new(0) }
    }

    pub fn count(&self) -> u64 {
        self.count.get()
    }

    pub fn inner(&self) -> &O {
        &self.inner
    }

    pub fn into_inner(self) -> O {
        self.inner
    }

    fn bump(&self) {
        self.count.set(self.count.get() + 1);
    }
}

impl<O: MembershipOracle> MembershipOracle for Counted<O> {
    fn dim(&self) -> usize {
        self.inner.dim()
    }
    fn member(&self, v: &Point) -> bool {
        self.bump();
        self.inner.member(v)
    }
}

impl<O: EquivalenceOracle> EquivalenceOracle for Counted<O> {
    fn dim(&self) -> usize {
        self.inner.dim()
    }
    fn equivalent(&mut self, h: &CubeUnion) -> Result<Option<Point>> {
        self.bump();
        self.inner.equivalent(h)
    }
    fn yields_corners(&self) -> bool {
        self.inner.yields_corners()
    }
}

impl<O: SubsetOracle> SubsetOracle for Counted<O> {
    fn dim(&self) -> usize {
        self.inner.dim()
    }
    fn subset(&mut self, h: &CubeUnion) -> Result<bool> {
        self.bump();
        self.inner.subset(h)
    }
}

impl<O: CornerOracle> CornerOracle for Counted<O> {
    fn min_corner(&mut self, set: &dyn MembershipOracle, from: &Point) -> Result<Point> {
        self.bump();
        self.inner.min_corner(set, from)
    }
    fn max_corner(&mut self, set: &dyn MembershipOracle, from: &Point) -> Result<Point> {
        self.bump();
        self.inner.max_corner(set, from)
    }
}

/// `v` is in the set and `v - e_i` is not, for every axis.
pub fn is_local_min_corner(set: &dyn MembershipOracle, v: &Point) -> bool {
    set.member(v) && (0..v.dim()).all(|i| v.offset(i, -1).map_or(true, |w| !set.member(&w)))
}

/// `v` is in the set and `v + e_i` is not, for every axis.
pub fn is_local_max_corner(set: &dyn MembershipOracle, v: &Point) -> bool {
    set.member(v) && (0..v.dim()).all(|i| v.offset(i, 1).map_or(true, |w| !set.member(&w)))
}
