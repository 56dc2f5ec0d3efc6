use std::fmt;

use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A cube bound: a finite lattice coordinate or one of the two infinities.
///
/// The derived ordering is the one the algebra needs:
/// `NegInf < Finite(_) < PosInf`, with finite values ordered numerically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Bound {
    NegInf,
    Finite(i64),
    PosInf,
}

impl Bound {
    pub fn is_finite(self) -> bool {
        matches!(self, Bound::Finite(_))
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            Bound::Finite(x) => Some(x),
            _ => None,
        }
    }

    /// Adds `delta` to a finite bound; infinities absorb it.
    pub fn checked_add(self, delta: i64) -> Result<Bound> {
        match self {
            Bound::Finite(x) => x.checked_add(delta).map(Bound::Finite).ok_or(Error::Overflow),
            other => Ok(other),
        }
    }

    /// Binary encoding size `1 + ceil(log2(|x| + 1))`, with size 1 for infinities.
    pub fn size(self) -> u64 {
        match self {
            Bound::Finite(x) => integer_size(x),
            _ => 1,
        }
    }
}

pub(crate) fn integer_size(x: i64) -> u64 {
    let m = x.unsigned_abs() as u128 + 1;
    // ceil(log2(m)) for m >= 1
    let floor = 127 - m.leading_zeros() as u64;
    let ceil = if m.is_power_of_two() { floor } else { floor + 1 };
    1 + ceil
}

impl From<i64> for Bound {
    fn from(x: i64) -> Self {
        Bound::Finite(x)
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::NegInf => f.write_str("-inf"),
            Bound::Finite(x) => write!(f, "{x}"),
            Bound::PosInf => f.write_str("+inf"),
        }
    }
}

impl Serialize for Bound {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Bound::Finite(x) => serializer.serialize_i64(*x),
            Bound::NegInf => serializer.serialize_str("-inf"),
            Bound::PosInf => serializer.serialize_str("+inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Bound {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Text(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Int(x) => Ok(Bound::Finite(x)),
            Raw::Text(s) if s == "-inf" => Ok(Bound::NegInf),
            Raw::Text(s) if s == "+inf" => Ok(Bound::PosInf),
            Raw::Text(s) => {
                Err(de::Error::custom(format!("invalid bound {s:?}: expected an integer, \"-inf\" or \"+inf\"")))
            }
        }
    }
}
