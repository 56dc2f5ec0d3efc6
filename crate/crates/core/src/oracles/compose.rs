//! Membership oracle combinators.
//!
//! Every combinator forwards to its operands, so counters wrapped around an
//! operand keep accumulating. Binary combinators evaluate left to right and
//! short-circuit like `&&` / `||`.

use crate::error::{check_dim, Error, Result};
use crate::geometry::Point;

use super::MembershipOracle;

/// Membership from a closure.
pub struct FnMembership<F> {
    dim: usize,
    f: F,
}

impl<F: Fn(&Point) -> bool> FnMembership<F> {
    pub fn new(dim: usize, f: F) -> Self {
        FnMembership { dim, f }
    }
}

impl<F: Fn(&Point) -> bool> MembershipOracle for FnMembership<F> {
    fn dim(&self) -> usize {
        self.dim
    }
    fn member(&self, v: &Point) -> bool {
        (self.f)(v)
    }
}

/// `{v | -v ∈ A}`
pub struct Negate<M>(M);

pub fn negate<M: MembershipOracle>(base: M) -> Negate<M> {
    Negate(base)
}

impl<M: MembershipOracle> MembershipOracle for Negate<M> {
    fn dim(&self) -> usize {
        self.0.dim()
    }
    fn member(&self, v: &Point) -> bool {
        // -i64::MIN is not representable, so such points are outside.
        v.neg().is_ok_and(|w| self.0.member(&w))
    }
}

/// `{v | v + offset ∈ A}`, i.e. `A - offset`.
pub struct Translate<M> {
    base: M,
    offset: Point,
}

pub fn translate<M: MembershipOracle>(base: M, offset: Point) -> Result<Translate<M>> {
    check_dim(base.dim(), offset.dim())?;
    Ok(Translate { base, offset })
}

impl<M: MembershipOracle> MembershipOracle for Translate<M> {
    fn dim(&self) -> usize {
        self.base.dim()
    }
    fn member(&self, v: &Point) -> bool {
        let shifted: Option<Vec<i64>> =
            v.coords().iter().zip(self.offset.coords()).map(|(a, b)| a.checked_add(*b)).collect();
        shifted.is_some_and(|c| self.base.member(&Point::new(c)))
    }
}

macro_rules! binary_combinator {
    ($name:ident, $ctor:ident, $doc:literal, |$a:ident, $b:ident, $v:ident| $body:expr) => {
        #[doc = $doc]
        pub struct $name<A, B> {
            a: A,
            b: B,
        }

        pub fn $ctor<A: MembershipOracle, B: MembershipOracle>(a: A, b: B) -> Result<$name<A, B>> {
            check_dim(a.dim(), b.dim())?;
            Ok($name { a, b })
        }

        impl<A: MembershipOracle, B: MembershipOracle> MembershipOracle for $name<A, B> {
            fn dim(&self) -> usize {
                self.a.dim()
            }
            fn member(&self, $v: &Point) -> bool {
                let ($a, $b) = (&self.a, &self.b);
                $body
            }
        }
    };
}

binary_combinator!(Union, union, "`A ∪ B`", |a, b, v| a.member(v) || b.member(v));
binary_combinator!(Intersect, intersect, "`A ∩ B`", |a, b, v| a.member(v) && b.member(v));
binary_combinator!(Difference, difference, "`A \\ B`", |a, b, v| a.member(v) && !b.member(v));
binary_combinator!(SymDiff, symdiff, "`A Δ B`", |a, b, v| a.member(v) != b.member(v));

/// `A` minus the region `{v | ∃ v' ∈ V: anchor ≤ v' ≤ v}` above visited
/// points that dominate the anchor.
pub struct Exclusion<'v, M> {
    base: M,
    visited: &'v [Point],
    anchor: Point,
}

pub fn exclusion<'v, M: MembershipOracle>(base: M, visited: &'v [Point], anchor: Point) -> Result<Exclusion<'v, M>> {
    check_dim(base.dim(), anchor.dim())?;
    for p in visited {
        check_dim(base.dim(), p.dim())?;
    }
    Ok(Exclusion { base, visited, anchor })
}

impl<M> Exclusion<'_, M> {
    pub fn excluded(&self, v: &Point) -> bool {
        self.visited.iter().any(|w| self.anchor.le(w) && w.le(v))
    }
}

impl<M: MembershipOracle> MembershipOracle for Exclusion<'_, M> {
    fn dim(&self) -> usize {
        self.base.dim()
    }
    fn member(&self, v: &Point) -> bool {
        self.base.member(v) && !self.excluded(v)
    }
}

/// `A ∩ {v | max_i |v[i]| ≤ r}`
pub struct Ball<M> {
    base: M,
    radius: u64,
}

pub fn ball<M: MembershipOracle>(base: M, radius: i64) -> Result<Ball<M>> {
    if radius < 0 {
        return Err(Error::Precondition(format!("negative ball radius {radius}")));
    }
    Ok(Ball { base, radius: radius as u64 })
}

impl<M: MembershipOracle> MembershipOracle for Ball<M> {
    fn dim(&self) -> usize {
        self.base.dim()
    }
    fn member(&self, v: &Point) -> bool {
        v.norm_inf() <= self.radius && self.base.member(v)
    }
}
