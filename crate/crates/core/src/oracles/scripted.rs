use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::geometry::Point;

use super::{is_local_max_corner, is_local_min_corner, CornerOracle, MembershipOracle};

/// Corner oracle that replays a fixed list of `(min, max)` pairs. A
/// `min_corner` call consumes the next pair and the following `max_corner`
/// call answers with its second half. Each answer must be a local corner of
/// the set it is asked about, otherwise the call fails.
#[derive(Clone, Debug, Default)]
pub struct ScriptedCorners {
    pairs: VecDeque<(Point, Point)>,
    pending_max: Option<Point>,
}

impl ScriptedCorners {
    pub fn new(pairs: Vec<(Point, Point)>) -> Self {
        ScriptedCorners { pairs: pairs.into(), pending_max: None }
    }

    pub fn remaining(&self) -> usize {
        self.pairs.len()
    }

    fn next_pair(&mut self) -> Result<(Point, Point)> {
        self.pairs.pop_front().ok_or(Error::ScriptExhausted)
    }
}

impl CornerOracle for ScriptedCorners {
    fn min_corner(&mut self, set: &dyn MembershipOracle, _from: &Point) -> Result<Point> {
        let (lo, hi) = self.next_pair()?;
        if !is_local_min_corner(set, &lo) {
            return Err(Error::Protocol(format!("scripted point {lo} is not a minimal corner")));
        }
        self.pending_max = Some(hi);
        Ok(lo)
    }

    fn max_corner(&mut self, set: &dyn MembershipOracle, _from: &Point) -> Result<Point> {
        let hi = match self.pending_max.take() {
            Some(hi) => hi,
            None => self.next_pair()?.1,
        };
        if !is_local_max_corner(set, &hi) {
            return Err(Error::Protocol(format!("scripted point {hi} is not a maximal corner")));
        }
        Ok(hi)
    }
}
