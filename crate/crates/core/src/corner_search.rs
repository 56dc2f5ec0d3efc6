//! Corner searches built from membership and subset oracles.
//!
//! Both settings reduce to the same one-dimensional question: how far can a
//! point (or a cube face) move along one axis while a monotone-looking
//! predicate keeps holding? [`SearchStrategy`] decides how that distance is
//! probed: one step at a time, by doubling followed by bisection, or unary
//! for the first few steps and doubling afterwards.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{check_dim, Error, Result};
use crate::geometry::{Bound, Cube, CubeUnion, Point};
use crate::oracles::{negate, CornerOracle, MembershipOracle, SubsetOracle};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchStrategy {
    Unary,
    #[default]
    Binary,
    Optimized {
        threshold: u32,
    },
}

impl SearchStrategy {
    pub const DEFAULT_THRESHOLD: u32 = 4;

    pub fn optimized() -> SearchStrategy {
        SearchStrategy::Optimized { threshold: Self::DEFAULT_THRESHOLD }
    }

    pub fn name(self) -> &'static str {
        match self {
            SearchStrategy::Unary => "unary",
            SearchStrategy::Binary => "binary",
            SearchStrategy::Optimized { .. } => "optimized",
        }
    }

    pub fn all() -> [SearchStrategy; 3] {
        [SearchStrategy::Unary, SearchStrategy::Binary, SearchStrategy::optimized()]
    }
}

impl fmt::Display for SearchStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchStrategy::Optimized { threshold } if *threshold != Self::DEFAULT_THRESHOLD => {
                write!(f, "optimized:{threshold}")
            }
            s => f.write_str(s.name()),
        }
    }
}

/// Accepts `unary`, `binary`, `optimized` and `optimized:N`.
impl FromStr for SearchStrategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "unary" => Ok(SearchStrategy::Unary),
            "binary" => Ok(SearchStrategy::Binary),
            "optimized" => Ok(SearchStrategy::optimized()),
            _ => {
                let n = s
                    .strip_prefix("optimized:")
                    .and_then(|n| n.parse::<u32>().ok())
                    .filter(|&n| n >= 1)
                    .ok_or_else(|| Error::Config(format!("unknown search strategy '{s}'")))?;
                Ok(SearchStrategy::Optimized { threshold: n })
            }
        }
    }
}

/// Guards against searching forever along a ray that never leaves the set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchLimits {
    pub max_doublings: u32,
    pub max_unary_steps: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits { max_doublings: 64, max_unary_steps: 1 << 24 }
    }
}

/// A bracket on how far a bound can move: `feasible` keeps the predicate,
/// `infeasible` breaks it. When the infinite override fires both are the
/// same infinite bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundPair {
    pub feasible: Bound,
    pub infeasible: Bound,
}

enum Bracket {
    Exact(i64),
    Between { ok: i64, bad: i64 },
}

/// Largest `t ≥ 0` reached by the strategy with `probe(t)` true, assuming
/// `probe(0)`. An overflowing probe offset means the ray left the i64 range.
fn extent(
    strategy: SearchStrategy,
    limits: SearchLimits,
    axis: usize,
    mut probe: impl FnMut(i64) -> Result<bool>,
) -> Result<i64> {
    let mut probe = |t: i64| match probe(t) {
        Err(Error::Overflow) => Err(Error::Unbounded { axis }),
        r => r,
    };
    let (ok, bad) = match bracket(strategy, limits, axis, &mut probe)? {
        Bracket::Exact(t) => return Ok(t),
        Bracket::Between { ok, bad } => (ok, bad),
    };
    bisect(ok, bad, probe)
}

fn bracket(
    strategy: SearchStrategy,
    limits: SearchLimits,
    axis: usize,
    probe: &mut impl FnMut(i64) -> Result<bool>,
) -> Result<Bracket> {
    let start = match strategy {
        SearchStrategy::Unary => {
            let mut t = 0i64;
            loop {
                if t as u64 >= limits.max_unary_steps {
                    return Err(Error::Unbounded { axis });
                }
                let next = t.checked_add(1).ok_or(Error::Unbounded { axis })?;
                if !probe(next)? {
                    return Ok(Bracket::Exact(t));
                }
                t = next;
            }
        }
        SearchStrategy::Binary => 0,
        SearchStrategy::Optimized { threshold } => {
            for t in 1..=i64::from(threshold) {
                if !probe(t)? {
                    return Ok(Bracket::Exact(t - 1));
                }
            }
            i64::from(threshold)
        }
    };
    let mut ok = start;
    let mut bad = if start == 0 { 1 } else { start.checked_mul(2).ok_or(Error::Unbounded { axis })? };
    let mut doublings = 0u32;
    while probe(bad)? {
        ok = bad;
        doublings += 1;
        if doublings >= limits.max_doublings {
            return Err(Error::Unbounded { axis });
        }
        bad = bad.checked_mul(2).ok_or(Error::Unbounded { axis })?;
    }
    Ok(Bracket::Between { ok, bad })
}

fn bisect(mut ok: i64, mut bad: i64, mut probe: impl FnMut(i64) -> Result<bool>) -> Result<i64> {
    while bad - ok > 1 {
        let mid = ok + (bad - ok) / 2;
        if probe(mid)? {
            ok = mid;
        } else {
            bad = mid;
        }
    }
    Ok(ok)
}

/// Climbs from `start` to a local maximal corner of the set answered by
/// `phi`: every axis is pushed as far as the strategy allows, and the sweep
/// restarts at axis 0 after any move.
pub fn find_max_corner(start: &Point, phi: &dyn MembershipOracle, strategy: SearchStrategy) -> Result<Point> {
    find_max_corner_with(start, phi, strategy, SearchLimits::default())
}

pub fn find_max_corner_with(
    start: &Point,
    phi: &dyn MembershipOracle,
    strategy: SearchStrategy,
    limits: SearchLimits,
) -> Result<Point> {
    check_dim(phi.dim(), start.dim())?;
    if !phi.member(start) {
        return Err(Error::Precondition(format!("corner search started outside the set at {start}")));
    }
    let mut v = start.clone();
    'sweep: loop {
        for axis in 0..v.dim() {
            let t = extent(strategy, limits, axis, |t| Ok(phi.member(&v.offset(axis, t)?)))?;
            if t > 0 {
                v = v.offset(axis, t)?;
                continue 'sweep;
            }
        }
        return Ok(v);
    }
}

/// Mirror image of [`find_max_corner`] through `v ↦ -v`.
pub fn find_min_corner(start: &Point, phi: &dyn MembershipOracle, strategy: SearchStrategy) -> Result<Point> {
    find_min_corner_with(start, phi, strategy, SearchLimits::default())
}

pub fn find_min_corner_with(
    start: &Point,
    phi: &dyn MembershipOracle,
    strategy: SearchStrategy,
    limits: SearchLimits,
) -> Result<Point> {
    let flipped = negate(phi);
    find_max_corner_with(&start.neg()?, &flipped, strategy, limits)?.neg()
}

/// Corner oracle realized by membership search.
#[derive(Clone, Copy, Debug, Default)]
pub struct SearchCorners {
    pub strategy: SearchStrategy,
    pub limits: SearchLimits,
}

impl SearchCorners {
    pub fn new(strategy: SearchStrategy) -> Self {
        SearchCorners { strategy, limits: SearchLimits::default() }
    }
}

impl CornerOracle for SearchCorners {
    fn min_corner(&mut self, set: &dyn MembershipOracle, from: &Point) -> Result<Point> {
        find_min_corner_with(from, set, self.strategy, self.limits)
    }
    fn max_corner(&mut self, set: &dyn MembershipOracle, from: &Point) -> Result<Point> {
        find_max_corner_with(from, set, self.strategy, self.limits)
    }
}

fn check_box(lo: &[Bound], hi: &[Bound]) -> Result<()> {
    check_dim(lo.len(), hi.len())?;
    if lo.is_empty() {
        return Err(Error::Precondition("empty bound vectors".into()));
    }
    Ok(())
}

fn probe_cube(rho: &mut dyn SubsetOracle, lo: &[Bound], hi: &[Bound]) -> Result<bool> {
    let c = Cube::new(lo.to_vec(), hi.to_vec())?;
    rho.subset(&CubeUnion::single(c))
}

/// How far `hi[axis]` can grow with `⟦lo, hi⟧ ⊆ X` kept, by doubling.
/// With `allow_infinite`, a single query for `hi[axis] = +∞` comes first.
pub fn compute_max_bounds(
    lo: &[Bound],
    hi: &[Bound],
    axis: usize,
    rho: &mut dyn SubsetOracle,
    allow_infinite: bool,
) -> Result<BoundPair> {
    check_box(lo, hi)?;
    let base = hi[axis].finite().ok_or_else(|| Error::Precondition(format!("upper bound {axis} is infinite")))?;
    let mut hi = hi.to_vec();
    if allow_infinite {
        hi[axis] = Bound::PosInf;
        if probe_cube(rho, lo, &hi)? {
            return Ok(BoundPair { feasible: Bound::PosInf, infeasible: Bound::PosInf });
        }
    }
    let mut probe = |t: i64| {
        hi[axis] = Bound::Finite(base.checked_add(t).ok_or(Error::Overflow)?);
        probe_cube(rho, lo, &hi)
    };
    match bracket(SearchStrategy::Binary, SearchLimits::default(), axis, &mut probe)? {
        Bracket::Between { ok, bad } => Ok(BoundPair {
            feasible: Bound::Finite(base + ok),
            infeasible: Bound::Finite(base.checked_add(bad).ok_or(Error::Overflow)?),
        }),
        Bracket::Exact(_) => unreachable!("binary bracketing always ends between two probes"),
    }
}

/// Mirror of [`compute_max_bounds`] for `lo[axis]`; here `feasible ≥ infeasible`.
pub fn compute_min_bounds(
    lo: &[Bound],
    hi: &[Bound],
    axis: usize,
    rho: &mut dyn SubsetOracle,
    allow_infinite: bool,
) -> Result<BoundPair> {
    check_box(lo, hi)?;
    let base = lo[axis].finite().ok_or_else(|| Error::Precondition(format!("lower bound {axis} is infinite")))?;
    let mut lo = lo.to_vec();
    if allow_infinite {
        lo[axis] = Bound::NegInf;
        if probe_cube(rho, &lo, hi)? {
            return Ok(BoundPair { feasible: Bound::NegInf, infeasible: Bound::NegInf });
        }
    }
    let mut probe = |t: i64| {
        lo[axis] = Bound::Finite(base.checked_sub(t).ok_or(Error::Overflow)?);
        probe_cube(rho, &lo, hi)
    };
    match bracket(SearchStrategy::Binary, SearchLimits::default(), axis, &mut probe)? {
        Bracket::Between { ok, bad } => Ok(BoundPair {
            feasible: Bound::Finite(base - ok),
            infeasible: Bound::Finite(base.checked_sub(bad).ok_or(Error::Overflow)?),
        }),
        Bracket::Exact(_) => unreachable!("binary bracketing always ends between two probes"),
    }
}

/// Subset queries spent on each axis by an inclusion-corner search.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxisQueries {
    pub per_axis: Vec<u64>,
    /// Axes that ended on an infinite bound.
    pub unbounded: Vec<usize>,
}

/// Grows `hi` one axis at a time, ascending, to the upper corner of a cube
/// maximal w.r.t. `X` with `lo` fixed. Requires `⟦lo, hi⟧ ⊆ X`.
pub fn find_max_inc_corner(
    lo: &[Bound],
    hi: &[Bound],
    rho: &mut dyn SubsetOracle,
    strategy: SearchStrategy,
    allow_infinite: bool,
) -> Result<Vec<Bound>> {
    find_max_inc_corner_counted(lo, hi, rho, strategy, allow_infinite).map(|(v, _)| v)
}

pub fn find_max_inc_corner_counted(
    lo: &[Bound],
    hi: &[Bound],
    rho: &mut dyn SubsetOracle,
    strategy: SearchStrategy,
    allow_infinite: bool,
) -> Result<(Vec<Bound>, AxisQueries)> {
    inc_corner(lo, hi, rho, strategy, allow_infinite, Direction::Up)
}

/// Lowers `lo` one axis at a time, ascending, with `hi` fixed.
pub fn find_min_inc_corner(
    lo: &[Bound],
    hi: &[Bound],
    rho: &mut dyn SubsetOracle,
    strategy: SearchStrategy,
    allow_infinite: bool,
) -> Result<Vec<Bound>> {
    find_min_inc_corner_counted(lo, hi, rho, strategy, allow_infinite).map(|(v, _)| v)
}

pub fn find_min_inc_corner_counted(
    lo: &[Bound],
    hi: &[Bound],
    rho: &mut dyn SubsetOracle,
    strategy: SearchStrategy,
    allow_infinite: bool,
) -> Result<(Vec<Bound>, AxisQueries)> {
    inc_corner(lo, hi, rho, strategy, allow_infinite, Direction::Down)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Direction {
    Up,
    Down,
}

fn inc_corner(
    lo: &[Bound],
    hi: &[Bound],
    rho: &mut dyn SubsetOracle,
    strategy: SearchStrategy,
    allow_infinite: bool,
    dir: Direction,
) -> Result<(Vec<Bound>, AxisQueries)> {
    check_box(lo, hi)?;
    check_dim(rho.dim(), lo.len())?;
    // validates lo ≤ hi
    Cube::new(lo.to_vec(), hi.to_vec())?;
    let d = lo.len();
    let mut lo = lo.to_vec();
    let mut hi = hi.to_vec();
    let mut stats = AxisQueries { per_axis: vec![0; d], unbounded: Vec::new() };
    for axis in 0..d {
        let moving = if dir == Direction::Up { hi[axis] } else { lo[axis] };
        let Some(base) = moving.finite() else {
            stats.unbounded.push(axis);
            continue;
        };
        let mut queries = 0u64;
        let mut ask = |lo: &[Bound], hi: &[Bound]| {
            queries += 1;
            probe_cube(rho, lo, hi)
        };
        if allow_infinite {
            let (mut l, mut h) = (lo.clone(), hi.clone());
            match dir {
                Direction::Up => h[axis] = Bound::PosInf,
                Direction::Down => l[axis] = Bound::NegInf,
            }
            if ask(&l, &h)? {
                lo = l;
                hi = h;
                stats.per_axis[axis] = queries;
                stats.unbounded.push(axis);
                continue;
            }
        }
        let t = extent(strategy, SearchLimits::default(), axis, |t| {
            let (mut l, mut h) = (lo.clone(), hi.clone());
            match dir {
                Direction::Up => h[axis] = Bound::Finite(base.checked_add(t).ok_or(Error::Overflow)?),
                Direction::Down => l[axis] = Bound::Finite(base.checked_sub(t).ok_or(Error::Overflow)?),
            }
            ask(&l, &h)
        })?;
        match dir {
            Direction::Up => hi[axis] = Bound::Finite(base + t),
            Direction::Down => lo[axis] = Bound::Finite(base - t),
        }
        stats.per_axis[axis] = queries;
    }
    Ok((if dir == Direction::Up { hi } else { lo }, stats))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::{is_local_max_corner, is_local_min_corner, CexPolicy, Counted, GroundTruthTeacher};

    fn cubes(d: usize, list: &[(&[i64], &[i64])]) -> CubeUnion {
        CubeUnion::from_cubes(d, list.iter().map(|(l, h)| Cube::finite(l, h).unwrap()).collect()).unwrap()
    }

    fn p<const N: usize>(c: [i64; N]) -> Point {
        Point::from(c)
    }

    #[test]
    fn strategy_parsing() {
        assert_eq!("unary".parse::<SearchStrategy>().unwrap(), SearchStrategy::Unary);
        assert_eq!("optimized".parse::<SearchStrategy>().unwrap(), SearchStrategy::Optimized { threshold: 4 });
        assert_eq!("optimized:7".parse::<SearchStrategy>().unwrap(), SearchStrategy::Optimized { threshold: 7 });
        assert!("optimized:0".parse::<SearchStrategy>().is_err());
        assert!("ternary".parse::<SearchStrategy>().is_err());
        assert_eq!(SearchStrategy::Optimized { threshold: 7 }.to_string(), "optimized:7");
    }

    #[test]
    fn extent_matches_all_strategies() {
        for limit in [0i64, 1, 2, 3, 4, 5, 8, 9, 16, 17, 100, 1023, 1024] {
            for s in SearchStrategy::all() {
                let t = extent(s, SearchLimits::default(), 0, |t| Ok(t <= limit)).unwrap();
                assert_eq!(t, limit, "{s} up to {limit}");
            }
        }
    }

    #[test]
    fn binary_probe_sequence() {
        let mut seen = Vec::new();
        let t = extent(SearchStrategy::Binary, SearchLimits::default(), 0, |t| {
            seen.push(t);
            Ok(t <= 9)
        })
        .unwrap();
        assert_eq!(t, 9);
        assert_eq!(seen, vec![1, 2, 4, 8, 16, 12, 10, 9]);
    }

    #[test]
    fn unbounded_ray_is_reported() {
        for s in SearchStrategy::all() {
            let limits = SearchLimits { max_doublings: 64, max_unary_steps: 1000 };
            let err = extent(s, limits, 1, |_| Ok(true)).unwrap_err();
            assert!(matches!(err, Error::Unbounded { axis: 1 }), "{s}: {err:?}");
        }
    }

    #[test]
    fn max_corner_of_single_cube() {
        let x = cubes(2, &[(&[0, 0], &[5, 3])]);
        for s in SearchStrategy::all() {
            assert_eq!(find_max_corner(&p([0, 0]), &x, s).unwrap(), p([5, 3]));
        }
    }

    #[test]
    fn max_corner_of_l_shape() {
        let x = cubes(2, &[(&[0, 0], &[4, 1]), (&[0, 0], &[1, 4])]);
        assert_eq!(find_max_corner(&p([0, 0]), &x, SearchStrategy::Binary).unwrap(), p([4, 1]));
        assert_eq!(find_max_corner(&p([0, 3]), &x, SearchStrategy::Binary).unwrap(), p([1, 4]));
    }

    #[test]
    fn sweep_restarts_after_each_move() {
        // x can only grow after y has climbed into the upper bar
        let x = cubes(2, &[(&[0, 0], &[0, 5]), (&[0, 5], &[6, 5])]);
        assert_eq!(find_max_corner(&p([0, 0]), &x, SearchStrategy::Binary).unwrap(), p([6, 5]));
    }

    #[test]
    fn min_corner_examples() {
        let x = cubes(2, &[(&[0, 3], &[5, 10])]);
        assert_eq!(find_min_corner(&p([5, 10]), &x, SearchStrategy::Binary).unwrap(), p([0, 3]));
        let two = cubes(2, &[(&[0, 0], &[0, 0]), (&[2, 2], &[2, 2])]);
        assert_eq!(find_min_corner(&p([2, 2]), &two, SearchStrategy::Binary).unwrap(), p([2, 2]));
        let line = cubes(1, &[(&[0], &[9])]);
        assert_eq!(find_min_corner(&p([9]), &line, SearchStrategy::Unary).unwrap(), p([0]));
    }

    #[test]
    fn start_outside_the_set_is_rejected() {
        let x = cubes(1, &[(&[0], &[9])]);
        assert!(matches!(find_max_corner(&p([10]), &x, SearchStrategy::Binary), Err(Error::Precondition(_))));
    }

    #[test]
    fn corners_are_local() {
        let x = cubes(2, &[(&[0, 0], &[4, 1]), (&[0, 0], &[1, 4]), (&[3, 3], &[7, 9])]);
        for s in SearchStrategy::all() {
            for start in [p([0, 0]), p([1, 3]), p([3, 3]), p([6, 8])] {
                let hi = find_max_corner(&start, &x, s).unwrap();
                let lo = find_min_corner(&start, &x, s).unwrap();
                assert!(is_local_max_corner(&x, &hi));
                assert!(is_local_min_corner(&x, &lo));
                assert!(start.le(&hi) && lo.le(&start));
            }
        }
    }

    fn teacher(x: CubeUnion) -> GroundTruthTeacher {
        GroundTruthTeacher::new(x, CexPolicy::LexMin).unwrap()
    }

    #[test]
    fn max_bounds_examples() {
        let t = teacher(cubes(1, &[(&[0], &[9])]));
        let mut rho = t.subset();
        let f = |x: i64| Bound::Finite(x);
        assert_eq!(
            compute_max_bounds(&[f(0)], &[f(0)], 0, &mut rho, false).unwrap(),
            BoundPair { feasible: f(8), infeasible: f(16) }
        );
        let t = teacher(cubes(1, &[(&[0], &[0])]));
        assert_eq!(
            compute_max_bounds(&[f(0)], &[f(0)], 0, &mut t.subset(), true).unwrap(),
            BoundPair { feasible: f(0), infeasible: f(1) }
        );
        let t = teacher(CubeUnion::single(Cube::new(vec![f(3)], vec![Bound::PosInf]).unwrap()));
        assert_eq!(
            compute_max_bounds(&[f(5)], &[f(5)], 0, &mut t.subset(), true).unwrap(),
            BoundPair { feasible: Bound::PosInf, infeasible: Bound::PosInf }
        );
        assert_eq!(
            compute_min_bounds(&[f(5)], &[f(5)], 0, &mut t.subset(), false).unwrap(),
            BoundPair { feasible: f(3), infeasible: f(1) }
        );
    }

    #[test]
    fn inc_corner_examples() {
        let f = |v: &[i64]| v.iter().map(|&x| Bound::Finite(x)).collect::<Vec<_>>();
        let x = cubes(2, &[(&[0, 0], &[9, 4]), (&[0, 0], &[3, 9])]);
        let t = teacher(x);
        for s in SearchStrategy::all() {
            let hi = find_max_inc_corner(&f(&[0, 0]), &f(&[0, 0]), &mut t.subset(), s, false).unwrap();
            assert_eq!(hi, f(&[9, 4]));
            let lo = find_min_inc_corner(&f(&[0, 0]), &hi, &mut t.subset(), s, true).unwrap();
            assert_eq!(lo, f(&[0, 0]));
        }
        let t = teacher(cubes(2, &[(&[0, 3], &[5, 10])]));
        let hi = find_max_inc_corner(&f(&[2, 5]), &f(&[2, 5]), &mut t.subset(), SearchStrategy::Binary, true).unwrap();
        assert_eq!(hi, f(&[5, 10]));
        let t = teacher(cubes(2, &[(&[2, 1], &[8, 8])]));
        let lo = find_min_inc_corner(&f(&[5, 5]), &f(&[8, 8]), &mut t.subset(), SearchStrategy::Unary, false).unwrap();
        assert_eq!(lo, f(&[2, 1]));
    }

    #[test]
    fn inc_corner_infinite_override() {
        let up = teacher(CubeUnion::single(Cube::new(vec![Bound::Finite(3)], vec![Bound::PosInf]).unwrap()));
        let mut rho = Counted::new(up.subset());
        let hi = find_max_inc_corner(&[Bound::Finite(5)], &[Bound::Finite(5)], &mut rho, SearchStrategy::Binary, true)
            .unwrap();
        assert_eq!(hi, vec![Bound::PosInf]);
        assert_eq!(rho.count(), 1);

        let down = teacher(CubeUnion::single(Cube::new(vec![Bound::NegInf], vec![Bound::Finite(10)]).unwrap()));
        let lo = find_min_inc_corner(
            &[Bound::Finite(5)],
            &[Bound::Finite(10)],
            &mut down.subset(),
            SearchStrategy::Binary,
            true,
        )
        .unwrap();
        assert_eq!(lo, vec![Bound::NegInf]);
    }

    #[test]
    fn inc_corner_without_override_reports_unbounded() {
        let up = teacher(CubeUnion::single(Cube::new(vec![Bound::Finite(3)], vec![Bound::PosInf]).unwrap()));
        let err = find_max_inc_corner(
            &[Bound::Finite(5)],
            &[Bound::Finite(5)],
            &mut up.subset(),
            SearchStrategy::Binary,
            false,
        )
        .unwrap_err();
        assert!(matches!(err, Error::Unbounded { axis: 0 }));
    }
}
