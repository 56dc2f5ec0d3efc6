use std::collections::VecDeque;
use std::sync::Arc;

use crate::corner_search::{find_min_corner, SearchStrategy};
use crate::error::{check_dim, Error, Result};
use crate::geometry::{CubeUnion, Point};

use super::{ball, EquivalenceOracle, MembershipOracle, SubsetOracle};

/// How the equivalence oracle picks a counterexample from `H Δ X`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum CexPolicy {
    /// Lexicographically smallest finite witness.
    #[default]
    LexMin,
    /// A local minimal corner of `H Δ X`, reached by descending from the
    /// lex-min witness inside a ball large enough to contain every finite
    /// bound of both sets.
    MinCorner,
    /// Scripted answers, validated against the target. Once `H = X` the
    /// oracle answers done without consuming the script.
    Script(Vec<Point>),
}

/// A teacher that knows the target union. It hands out one oracle object per
/// query kind so a learner can hold them simultaneously.
#[derive(Clone, Debug)]
pub struct GroundTruthTeacher {
    target: Arc<CubeUnion>,
    policy: CexPolicy,
}

impl GroundTruthTeacher {
    pub fn new(target: CubeUnion, policy: CexPolicy) -> Result<Self> {
        if let CexPolicy::Script(points) = &policy {
            for p in points {
                check_dim(target.dim(), p.dim())?;
            }
        }
        Ok(GroundTruthTeacher { target: Arc::new(target.canonical()?), policy })
    }

    pub fn target(&self) -> &CubeUnion {
        &self.target
    }

    pub fn policy(&self) -> &CexPolicy {
        &self.policy
    }

    pub fn dim(&self) -> usize {
        self.target.dim()
    }

    pub fn membership(&self) -> TargetMembership {
        TargetMembership { target: Arc::clone(&self.target) }
    }

    pub fn equivalence(&self) -> TargetEquivalence {
        let script = match &self.policy {
            CexPolicy::Script(points) => points.iter().cloned().collect(),
            _ => VecDeque::new(),
        };
        TargetEquivalence { target: Arc::clone(&self.target), policy: self.policy.clone(), script }
    }

    pub fn subset(&self) -> TargetSubset {
        TargetSubset { target: Arc::clone(&self.target) }
    }
}

#[derive(Clone, Debug)]
pub struct TargetMembership {
    target: Arc<CubeUnion>,
}

impl MembershipOracle for TargetMembership {
    fn dim(&self) -> usize {
        self.target.dim()
    }
    fn member(&self, v: &Point) -> bool {
        self.target.contains_point(v)
    }
}

#[derive(Clone, Debug)]
pub struct TargetEquivalence {
    target: Arc<CubeUnion>,
    policy: CexPolicy,
    script: VecDeque<Point>,
}

impl TargetEquivalence {
    /// Scripted counterexamples not yet handed out.
    pub fn remaining_script(&self) -> usize {
        self.script.len()
    }

    fn min_corner(&self, h: &CubeUnion, diff: &CubeUnion) -> Result<Option<Point>> {
        let Some(w) = h.difference_witness(&self.target)? else {
            return Ok(None);
        };
        let m = self.target.max_finite_magnitude().max(h.max_finite_magnitude());
        let radius = i64::try_from(m).ok().and_then(|m| m.checked_mul(2)).and_then(|m| m.checked_add(2));
        let radius = radius.ok_or(Error::Overflow)?;
        let restricted = ball(diff, radius)?;
        find_min_corner(&w, &restricted, SearchStrategy::Binary).map(Some)
    }
}

impl EquivalenceOracle for TargetEquivalence {
    fn dim(&self) -> usize {
        self.target.dim()
    }

    fn equivalent(&mut self, h: &CubeUnion) -> Result<Option<Point>> {
        check_dim(self.target.dim(), h.dim())?;
        match &self.policy {
            CexPolicy::LexMin => h.difference_witness(&self.target),
            CexPolicy::MinCorner => {
                let diff = h.symmetric_difference(&self.target)?;
                if diff.is_empty() {
                    return Ok(None);
                }
                self.min_corner(h, &diff)
            }
            CexPolicy::Script(_) => {
                let diff = h.symmetric_difference(&self.target)?;
                if diff.is_empty() {
                    return Ok(None);
                }
                let p = self.script.pop_front().ok_or(Error::ScriptExhausted)?;
                if !diff.contains(&p)? {
                    return Err(Error::Protocol(format!("scripted counterexample {p} is not in H Δ X")));
                }
                Ok(Some(p))
            }
        }
    }

    fn yields_corners(&self) -> bool {
        self.policy == CexPolicy::MinCorner
    }
}

#[derive(Clone, Debug)]
pub struct TargetSubset {
    target: Arc<CubeUnion>,
}

impl SubsetOracle for TargetSubset {
    fn dim(&self) -> usize {
        self.target.dim()
    }
    fn subset(&mut self, h: &CubeUnion) -> Result<bool> {
        h.is_subset_of(&self.target)
    }
}
