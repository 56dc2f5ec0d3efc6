//! Learning loops.
//!
//! Every learner asks the equivalence oracle for a counterexample, turns it
//! into a cube with corner or bound searches, and updates the hypothesis
//! until the oracle answers done:
//!
//! | algorithm | oracles | update |
//! |---|---|---|
//! | `overshoot-sym` | membership, equivalence | `H Δ C` |
//! | `overshoot-addremove` | membership, equivalence | `H ∪ C` or `H \ C` |
//! | `overshoot-sym-opt`, `overshoot-addremove-opt` | same, plus visited minimal corners | as above |
//! | `maxcube` | subset, equivalence | `H ∪ C`, `C` maximal in `X` |
//! | `infinity-meq` | membership, equivalence returning corners | `H Δ C`, `C` possibly unbounded |
//!
//! The overshooting learners may learn a cube spanning several target
//! components and correct it later; the visited-corner variants forbid
//! restarting a search from a minimal corner already used, which bounds the
//! number of rounds by `(2n)^d` for a target of `n` cubes.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::corner_search::{SearchCorners, SearchLimits, SearchStrategy};
use crate::error::{Error, Result};
use crate::geometry::{Cube, CubeUnion, Point, UnionOp};
use crate::oracles::{CornerOracle, EquivalenceOracle, GroundTruthTeacher, MembershipOracle, SubsetOracle};

mod infinity;
mod maxcube;
mod overshoot;

pub use infinity::{ext_hi, ext_lo, learn_cubes_infinity_meq, learn_cubes_infinity_meq_with};
pub use maxcube::{learn_max_cube, learn_max_cube_with};
pub use overshoot::{learn_cubes, learn_cubes_with};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    OvershootSym,
    #[serde(rename = "overshoot-addremove")]
    OvershootAddRemove,
    #[serde(rename = "overshoot-sym-opt")]
    OvershootOptSym,
    #[serde(rename = "overshoot-addremove-opt")]
    OvershootOptAddRemove,
    #[serde(rename = "maxcube")]
    MaxCube,
    InfinityMeq,
}

impl Algorithm {
    pub const ALL: [Algorithm; 6] = [
        Algorithm::OvershootSym,
        Algorithm::OvershootAddRemove,
        Algorithm::OvershootOptSym,
        Algorithm::OvershootOptAddRemove,
        Algorithm::MaxCube,
        Algorithm::InfinityMeq,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::OvershootSym => "overshoot-sym",
            Algorithm::OvershootAddRemove => "overshoot-addremove",
            Algorithm::OvershootOptSym => "overshoot-sym-opt",
            Algorithm::OvershootOptAddRemove => "overshoot-addremove-opt",
            Algorithm::MaxCube => "maxcube",
            Algorithm::InfinityMeq => "infinity-meq",
        }
    }

    pub fn is_overshooting(self) -> bool {
        !matches!(self, Algorithm::MaxCube | Algorithm::InfinityMeq)
    }

    /// Uses the visited-corner exclusion.
    pub fn is_optimized(self) -> bool {
        matches!(self, Algorithm::OvershootOptSym | Algorithm::OvershootOptAddRemove | Algorithm::InfinityMeq)
    }

    pub fn is_symmetric(self) -> bool {
        matches!(self, Algorithm::OvershootSym | Algorithm::OvershootOptSym | Algorithm::InfinityMeq)
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.to_ascii_lowercase().replace('_', "-");
        let alias = match norm.as_str() {
            "overshoot-opt-sym" => "overshoot-sym-opt",
            "overshoot-opt-addremove" => "overshoot-addremove-opt",
            "max-cube" => "maxcube",
            other => other,
        };
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == alias)
            .ok_or_else(|| Error::Config(format!("unknown algorithm '{s}'")))
    }
}

#[derive(Clone, Debug)]
pub struct LearnerConfig {
    pub algorithm: Algorithm,
    pub strategy: SearchStrategy,
    /// Maximum number of refinements before giving up.
    pub max_iterations: u64,
    /// Lets `maxcube` probe for infinite bounds (one subset query per
    /// coordinate and direction).
    pub allow_infinite: bool,
    pub record_trace: bool,
    pub deadline: Option<Instant>,
    pub limits: SearchLimits,
}

impl LearnerConfig {
    pub const DEFAULT_MAX_ITERATIONS: u64 = 100_000;

    pub fn new(algorithm: Algorithm) -> Self {
        LearnerConfig {
            algorithm,
            strategy: SearchStrategy::default(),
            max_iterations: Self::DEFAULT_MAX_ITERATIONS,
            allow_infinite: algorithm == Algorithm::MaxCube,
            record_trace: false,
            deadline: None,
            limits: SearchLimits::default(),
        }
    }

    pub fn strategy(mut self, strategy: SearchStrategy) -> Self {
        self.strategy = strategy;
        self
    }

    pub fn max_iterations(mut self, n: u64) -> Self {
        self.max_iterations = n;
        self
    }

    pub fn allow_infinite(mut self, yes: bool) -> Self {
        self.allow_infinite = yes;
        self
    }

    pub fn record_trace(mut self, yes: bool) -> Self {
        self.record_trace = yes;
        self
    }

    pub fn deadline(mut self, at: Instant) -> Self {
        self.deadline = Some(at);
        self
    }

    /// `10·(2n)^d` for a target of `n` cubes in dimension `d`.
    pub fn budget_for(target: &CubeUnion) -> u64 {
        let base = 2 * target.len().max(1) as u64;
        let d = u32::try_from(target.dim()).unwrap_or(u32::MAX);
        base.checked_pow(d).and_then(|b| b.checked_mul(10)).unwrap_or(u64::MAX)
    }
}

/// Minimal corners already used as search anchors.
#[derive(Clone, Debug, Default)]
pub struct VisitedCorners {
    points: Vec<Point>,
}

impl VisitedCorners {
    pub fn new() -> Self {
        VisitedCorners::default()
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.points.contains(p)
    }

    /// Fails if `p` was visited before; in a correct run this cannot happen.
    pub fn insert(&mut self, p: Point) -> Result<()> {
        if self.contains(&p) {
            return Err(Error::Protocol(format!("minimal corner {p} visited twice")));
        }
        self.points.push(p);
        Ok(())
    }

    pub fn as_slice(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RefinementKind {
    Add,
    Remove,
    Symdiff,
}

impl From<RefinementKind> for UnionOp {
    fn from(k: RefinementKind) -> UnionOp {
        match k {
            RefinementKind::Add => UnionOp::Add,
            RefinementKind::Remove => UnionOp::Remove,
            RefinementKind::Symdiff => UnionOp::Symdiff,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub counterexample: Point,
    pub cube: Cube,
    pub kind: RefinementKind,
}

/// Query counts of one session. `corner` counts corner oracle calls (one
/// per minimal and one per maximal corner); the membership queries those
/// searches issue are also in `membership`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct QueryStats {
    pub membership: u64,
    pub equivalence: u64,
    pub subset: u64,
    pub corner: u64,
    pub refinements: u64,
    pub additions: u64,
    pub removals: u64,
    pub min_corner_membership: u64,
    pub max_corner_membership: u64,
    pub max_inc_subset: u64,
    pub min_inc_subset: u64,
    /// Coordinates (per direction) that `maxcube` found unbounded.
    pub unbounded_axes: u64,
    /// Subset queries spent on those coordinates.
    pub unbounded_axis_subset: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LearnResult {
    pub hypothesis: CubeUnion,
    pub stats: QueryStats,
    /// Equivalence queries issued, including the final one.
    pub iterations: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub trace: Option<Vec<TraceStep>>,
}

/// What a learner just did; handed to an [`Observer`] after every update.
pub struct RefinementEvent<'a> {
    pub iteration: u64,
    pub counterexample: &'a Point,
    pub cube: &'a Cube,
    pub kind: RefinementKind,
    pub hypothesis: &'a CubeUnion,
    pub visited: &'a [Point],
}

/// Hook run after every refinement. Returning an error aborts the session,
/// which is how invariant checks plug in.
pub trait Observer {
    fn on_refinement(&mut self, event: &RefinementEvent<'_>) -> Result<()>;
}

impl Observer for () {
    fn on_refinement(&mut self, _: &RefinementEvent<'_>) -> Result<()> {
        Ok(())
    }
}

impl<F: FnMut(&RefinementEvent<'_>) -> Result<()>> Observer for F {
    fn on_refinement(&mut self, event: &RefinementEvent<'_>) -> Result<()> {
        self(event)
    }
}

/// Mutable state shared by all loops.
pub(crate) struct Session<'o> {
    cfg: LearnerConfig,
    pub(crate) hypothesis: CubeUnion,
    pub(crate) stats: QueryStats,
    pub(crate) visited: VisitedCorners,
    trace: Option<Vec<TraceStep>>,
    observer: &'o mut dyn Observer,
}

impl<'o> Session<'o> {
    pub(crate) fn new(dim: usize, cfg: &LearnerConfig, observer: &'o mut dyn Observer) -> Self {
        Session {
            cfg: cfg.clone(),
            hypothesis: CubeUnion::empty(dim),
            stats: QueryStats::default(),
            visited: VisitedCorners::new(),
            trace: cfg.record_trace.then(Vec::new),
            observer,
        }
    }

    pub(crate) fn cfg(&self) -> &LearnerConfig {
        &self.cfg
    }

    /// Next counterexample, or `None` once the hypothesis is exact.
    pub(crate) fn counterexample(&mut self, psi: &mut dyn EquivalenceOracle) -> Result<Option<Point>> {
        if self.cfg.deadline.is_some_and(|d| Instant::now() >= d) {
            return Err(Error::Timeout);
        }
        self.stats.equivalence += 1;
        let answer = psi.equivalent(&self.hypothesis)?;
        if answer.is_some() && self.stats.refinements >= self.cfg.max_iterations {
            return Err(Error::Budget { limit: self.cfg.max_iterations });
        }
        Ok(answer)
    }

    pub(crate) fn refine(&mut self, counterexample: Point, cube: Cube, kind: RefinementKind) -> Result<()> {
        self.hypothesis = self.hypothesis.apply(kind.into(), &cube)?;
        self.stats.refinements += 1;
        match kind {
            RefinementKind::Add => self.stats.additions += 1,
            RefinementKind::Remove => self.stats.removals += 1,
            RefinementKind::Symdiff => {}
        }
        self.observer.on_refinement(&RefinementEvent {
            iteration: self.stats.refinements,
            counterexample: &counterexample,
            cube: &cube,
            kind,
            hypothesis: &self.hypothesis,
            visited: self.visited.as_slice(),
        })?;
        if let Some(trace) = &mut self.trace {
            trace.push(TraceStep { counterexample, cube, kind });
        }
        Ok(())
    }

    pub(crate) fn finish(self) -> LearnResult {
        LearnResult {
            hypothesis: self.hypothesis,
            iterations: self.stats.equivalence,
            stats: self.stats,
            trace: self.trace,
        }
    }
}

/// The oracles a session may use. Which ones are required depends on the
/// algorithm; `corners` defaults to membership search with the configured
/// strategy.
pub struct Oracles<'a> {
    pub membership: Option<&'a dyn MembershipOracle>,
    pub equivalence: &'a mut dyn EquivalenceOracle,
    pub subset: Option<&'a mut dyn SubsetOracle>,
    pub corners: Option<&'a mut dyn CornerOracle>,
}

/// Runs the configured algorithm on whatever oracles it needs.
pub fn run(oracles: Oracles<'_>, cfg: &LearnerConfig, observer: &mut dyn Observer) -> Result<LearnResult> {
    let missing = |what: &str| Error::Config(format!("{} needs a {what} oracle", cfg.algorithm));
    let mut default_corners = SearchCorners { strategy: cfg.strategy, limits: cfg.limits };
    let corners: &mut dyn CornerOracle = match oracles.corners {
        Some(c) => c,
        None => &mut default_corners,
    };
    match cfg.algorithm {
        Algorithm::MaxCube => {
            let rho = oracles.subset.ok_or_else(|| missing("subset"))?;
            learn_max_cube_with(rho, oracles.equivalence, cfg, observer)
        }
        Algorithm::InfinityMeq => {
            let phi = oracles.membership.ok_or_else(|| missing("membership"))?;
            learn_cubes_infinity_meq_with(phi, oracles.equivalence, corners, cfg, observer)
        }
        _ => {
            let phi = oracles.membership.ok_or_else(|| missing("membership"))?;
            learn_cubes_with(phi, oracles.equivalence, corners, cfg, observer)
        }
    }
}

/// Learns the target of a ground-truth teacher.
pub fn learn(teacher: &GroundTruthTeacher, cfg: &LearnerConfig) -> Result<LearnResult> {
    learn_observed(teacher, cfg, &mut ())
}

pub fn learn_observed(
    teacher: &GroundTruthTeacher,
    cfg: &LearnerConfig,
    observer: &mut dyn Observer,
) -> Result<LearnResult> {
    let phi = teacher.membership();
    let mut psi = teacher.equivalence();
    let mut rho = teacher.subset();
    run(Oracles { membership: Some(&phi), equivalence: &mut psi, subset: Some(&mut rho), corners: None }, cfg, observer)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algorithm_names_round_trip() {
        for a in Algorithm::ALL {
            assert_eq!(a.name().parse::<Algorithm>().unwrap(), a);
            assert_eq!(a.name().replace('-', "_").parse::<Algorithm>().unwrap(), a);
            assert_eq!(serde_json::to_string(&a).unwrap(), format!("\"{}\"", a.name()));
        }
        assert!("overshoot".parse::<Algorithm>().is_err());
    }

    #[test]
    fn visited_rejects_duplicates() {
        let mut v = VisitedCorners::new();
        v.insert(Point::from([1, 2])).unwrap();
        assert!(v.insert(Point::from([1, 2])).is_err());
        assert_eq!(v.len(), 1);
    }

    #[test]
    fn default_budget() {
        let x = CubeUnion::from_cubes(
            2,
            vec![Cube::finite(&[0, 0], &[1, 1]).unwrap(), Cube::finite(&[3, 3], &[5, 5]).unwrap()],
        )
        .unwrap();
        assert_eq!(LearnerConfig::budget_for(&x), 160);
    }
}
