//! Integer-lattice cube algebra.
//!
//! Points, cubes with possibly infinite bounds, and finite unions of cubes
//! closed under union, intersection, difference and symmetric difference.
//! All values are immutable; operations return new values.

mod bound;
mod cube;
mod grid;
mod point;
mod union;

pub use bound::Bound;
pub use cube::Cube;
pub use grid::AbstractGrid;
pub use point::Point;
pub use union::{interval, CubeUnion, UnionOp};
