//! Scalar abstraction shared by every geometric routine.
//!
//! All predicates are written against [`Scalar`], so they run unchanged on
//! arbitrary-precision rationals (the exact instantiation used throughout the
//! toolkit) and on machine floats (useful for integer-valued inputs and for
//! rendering). Only the rational instantiation is exact in general.

use std::cmp::Ordering;
use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

/// Ordered field operations required by the kernel.
pub trait Scalar:
    Clone + Debug + PartialEq + PartialOrd + Num + Signed + FromPrimitive + Send + Sync
{
    /// Lossy conversion for presentation (SVG, summaries).
    fn to_f64_lossy(&self) -> f64;

    /// `self / 2`.
    fn half(&self) -> Self {
        self.clone() / Self::from_i64(2).expect("2 is representable")
    }

    fn sign(&self) -> Sign {
        if self.is_positive() {
            Sign::Positive
        } else if self.is_negative() {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }

    /// Total comparison; panics on incomparable values (NaN).
    fn cmp_total(&self, other: &Self) -> Ordering {
        self.partial_cmp(other)
            .expect("scalar values must be totally ordered")
    }
}

impl Scalar for BigRational {
    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or_else(|| {
            // to_f64 gives up on very large numerators/denominators.
            let n = self.numer().bits() as i64;
            let d = self.denom().bits() as i64;
            let shift = (n.max(d) - 60).max(0) as usize;
            let num = (self.numer() >> shift).to_f64().unwrap_or(0.0);
            let den = (self.denom() >> shift).to_f64().unwrap_or(1.0);
            num / den
        })
    }
}

impl Scalar for f64 {
    fn to_f64_lossy(&self) -> f64 {
        *self
    }
}

/// The three-valued sign used for orientations and sextuple types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "i8", try_from = "i8")]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }

    /// Compact one-character form used in reports: `-`, `0`, `+`.
    pub fn symbol(self) -> char {
        match self {
            Sign::Negative => '-',
            Sign::Zero => '0',
            Sign::Positive => '+',
        }
    }
}

/// Sign of a product.
impl std::ops::Mul for Sign {
    type Output = Sign;

    fn mul(self, other: Sign) -> Sign {
        match self.as_i8() * other.as_i8() {
            -1 => Sign::Negative,
            0 => Sign::Zero,
            _ => Sign::Positive,
        }
    }
}

impl From<Sign> for i8 {
    fn from(s: Sign) -> i8 {
        s.as_i8()
    }
}

impl TryFrom<i8> for Sign {
    type Error = String;

    fn try_from(v: i8) -> Result<Self, Self::Error> {
        match v {
            -1 => Ok(Sign::Negative),
            0 => Ok(Sign::Zero),
            1 => Ok(Sign::Positive),
            other => Err(format!("sign must be -1, 0 or 1, got {other}")),
        }
    }
}

impl From<Ordering> for Sign {
    fn from(o: Ordering) -> Sign {
        match o {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }
}

/// Builds a rational `num/den`; panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Builds an integer-valued rational.
pub fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Parses `"p/q"` or `"p"` into a reduced rational.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse::<BigInt>().ok()?, d.trim().parse::<BigInt>().ok()?),
        None => (s.parse::<BigInt>().ok()?, BigInt::from(1)),
    };
    if den == BigInt::from(0) {
        return None;
    }
    Some(BigRational::new(num, den))
}

/// Formats a rational as `"p/q"` (always with a denominator).
pub fn format_rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}
