//! Extended number types: `ExtNat` for ψ and the domination parameters,
//! `ExtInt` for connectivity values (which can be `-2` or `-1`).

use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};

/// A non-negative integer or infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtNat {
    Finite(u64),
    Infinite,
}

impl ExtNat {
    pub const ZERO: ExtNat = ExtNat::Finite(0);

    pub fn is_infinite(self) -> bool {
        matches!(self, ExtNat::Infinite)
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            ExtNat::Finite(v) => Some(v),
            ExtNat::Infinite => None,
        }
    }

    /// `self - k`, saturating at zero. Used for thresholds of the form
    /// `t - |F| + 1`.
    pub fn saturating_sub(self, k: u64) -> ExtNat {
        match self {
            ExtNat::Finite(v) => ExtNat::Finite(v.saturating_sub(k)),
            ExtNat::Infinite => ExtNat::Infinite,
        }
    }

    /// `self - k` as a signed extended integer.
    pub fn minus(self, k: i64) -> ExtInt {
        match self {
            ExtNat::Finite(v) => ExtInt::Finite(v as i64 - k),
            ExtNat::Infinite => ExtInt::Infinite,
        }
    }

    /// `⌈self / 2⌉`.
    pub fn half_ceil(self) -> ExtNat {
        match self {
            ExtNat::Finite(v) => ExtNat::Finite(v.div_ceil(2)),
            ExtNat::Infinite => ExtNat::Infinite,
        }
    }
}

impl Add for ExtNat {
    type Output = ExtNat;

    fn add(self, rhs: ExtNat) -> ExtNat {
        match (self, rhs) {
            (ExtNat::Finite(a), ExtNat::Finite(b)) => ExtNat::Finite(a + b),
            _ => ExtNat::Infinite,
        }
    }
}

impl Add<u64> for ExtNat {
    type Output = ExtNat;

    fn add(self, rhs: u64) -> ExtNat {
        self + ExtNat::Finite(rhs)
    }
}

impl From<u64> for ExtNat {
    fn from(v: u64) -> Self {
        ExtNat::Finite(v)
    }
}

impl fmt::Display for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtNat::Finite(v) => write!(f, "{v}"),
            ExtNat::Infinite => write!(f, "inf"),
        }
    }
}

/// A (possibly negative) integer or infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtInt {
    Finite(i64),
    Infinite,
}

impl ExtInt {
    pub fn is_infinite(self) -> bool {
        matches!(self, ExtInt::Infinite)
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            ExtInt::Finite(v) => Some(v),
            ExtInt::Infinite => None,
        }
    }

    pub fn shift(self, k: i64) -> ExtInt {
        match self {
            ExtInt::Finite(v) => ExtInt::Finite(v + k),
            ExtInt::Infinite => ExtInt::Infinite,
        }
    }

    /// Back to `ExtNat`; `None` when the value is negative.
    pub fn to_ext_nat(self) -> Option<ExtNat> {
        match self {
            ExtInt::Finite(v) if v >= 0 => Some(ExtNat::Finite(v as u64)),
            ExtInt::Finite(_) => None,
            ExtInt::Infinite => Some(ExtNat::Infinite),
        }
    }
}

impl From<ExtNat> for ExtInt {
    fn from(v: ExtNat) -> Self {
        v.minus(0)
    }
}

impl fmt::Display for ExtInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtInt::Finite(v) => write!(f, "{v}"),
            ExtInt::Infinite => write!(f, "inf"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_puts_infinity_last() {
        assert!(ExtNat::Finite(u64::MAX) < ExtNat::Infinite);
        assert!(ExtInt::Finite(-2) < ExtInt::Finite(0));
        assert!(ExtInt::Finite(i64::MAX) < ExtInt::Infinite);
    }

    #[test]
    fn arithmetic_absorbs_infinity() {
        assert_eq!(ExtNat::Infinite + 3, ExtNat::Infinite);
        assert_eq!(ExtNat::Finite(2) + ExtNat::Finite(3), ExtNat::Finite(5));
        assert_eq!(ExtNat::Finite(1).minus(2), ExtInt::Finite(-1));
        assert_eq!(ExtNat::Infinite.minus(2), ExtInt::Infinite);
        assert_eq!(ExtNat::Finite(3).half_ceil(), ExtNat::Finite(2));
        assert_eq!(ExtNat::Finite(1).saturating_sub(4), ExtNat::ZERO);
    }
}
