//! Exact learning of finite unions of integer hypercubes.
//!
//! A target set `X ⊆ ℤ^d` given as a finite union of axis-aligned cubes
//! (bounds possibly infinite) is learned from queries to a teacher:
//!
//! * membership: is `v ∈ X`?
//! * equivalence: is `H = X`? otherwise a counterexample in `H Δ X`
//! * subset: is `H ⊆ X`?
//!
//! [`learners`] holds the learning loops (overshooting, visited-corner
//! optimized overshooting, maximal cubes, unbounded targets from membership
//! and equivalence only). [`corner_search`] holds the doubling and bisection
//! searches they are built on, [`oracles`] the oracle traits, combinators and
//! a ground-truth teacher, and [`mondec`] applies the learners to monadic
//! decomposition of linear integer arithmetic formulas.
//!
//! Runnable walkthroughs live in the crate's `examples/` directory:
//!
//! ```bash
//! cargo run -p cubelearn --example overshooting
//! cargo run -p cubelearn --example monadic_decomposition
//! ```

pub mod bench;
pub mod cli;
pub mod corner_search;
pub mod error;
pub mod geometry;
pub mod learners;
pub mod mondec;
pub mod oracles;

pub use error::{Error, Result};
pub use geometry::{AbstractGrid, Bound, Cube, CubeUnion, Point, UnionOp};
