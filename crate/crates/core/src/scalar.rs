//! The tropical semifield: exact rationals extended by `-inf`, with
//! addition `max` and multiplication `+`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number used throughout the crate.
pub type Rat = BigRational;

pub fn rat_int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Parses "p/q" or "p". Rejects anything else (floats in particular).
pub fn rat_from_str(s: &str) -> Result<Rat> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<BigInt> {
        t.parse::<BigInt>()
            .map_err(|_| Error::parse(0, format!("invalid integer '{t}'")))
    };
    match s.split_once('/') {
        Some((num, den)) => {
            let num = parse_int(num)?;
            let den = parse_int(den)?;
            if den.is_zero() {
                return Err(Error::parse(0, "zero denominator"));
            }
            Ok(Rat::new(num, den))
        }
        None => Ok(Rat::from_integer(parse_int(s)?)),
    }
}

/// Renders in lowest terms with positive denominator: "p" or "p/q".
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Element of the tropical semifield `T = (Q ∪ {-inf}, max, +)`.
///
/// The boolean subsemifield `B` is `{zero(), one()}` here, i.e. `{-inf, 0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TropScalar {
    NegInf,
    Finite(Rat),
}

impl TropScalar {
    pub fn finite(v: Rat) -> Self {
        TropScalar::Finite(v)
    }

    pub fn from_int(v: i64) -> Self {
        TropScalar::Finite(rat_int(v))
    }

    /// Additive identity (absorbing for ⊙): `-inf`.
    pub fn zero() -> Self {
        TropScalar::NegInf
    }

    /// Multiplicative identity: the rational number 0.
    pub fn one() -> Self {
        TropScalar::Finite(Rat::zero())
    }

    pub fn is_neg_inf(&self) -> bool {
        matches!(self, TropScalar::NegInf)
    }

    pub fn as_finite(&self) -> Option<&Rat> {
        match self {
            TropScalar::NegInf => None,
            TropScalar::Finite(v) => Some(v),
        }
    }

    /// Tropical addition: `a ⊕ b = max(a, b)`.
    pub fn add(&self, other: &TropScalar) -> TropScalar {
        match (self, other) {
            (TropScalar::NegInf, b) => b.clone(),
            (a, TropScalar::NegInf) => a.clone(),
            (TropScalar::Finite(a), TropScalar::Finite(b)) => {
                TropScalar::Finite(a.max(b).clone())
            }
        }
    }

    /// Tropical multiplication: `a ⊙ b = a + b`, with `-inf` absorbing.
    pub fn mul(&self, other: &TropScalar) -> TropScalar {
        match (self, other) {
            (TropScalar::NegInf, _) | (_, TropScalar::NegInf) => TropScalar::NegInf,
            (TropScalar::Finite(a), TropScalar::Finite(b)) => TropScalar::Finite(a + b),
        }
    }

    /// Tropical inverse: `a^{⊙(-1)} = -a`. Fails on `-inf`.
    pub fn inv(&self) -> Result<TropScalar> {
        match self {
            TropScalar::NegInf => Err(Error::InvertZero),
            TropScalar::Finite(a) => Ok(TropScalar::Finite(-a)),
        }
    }
}

impl PartialOrd for TropScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for TropScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (TropScalar::NegInf, TropScalar::NegInf) => Ordering::Equal,
            (TropScalar::NegInf, _) => Ordering::Less,
            (_, TropScalar::NegInf) => Ordering::Greater,
            (TropScalar::Finite(a), TropScalar::Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for TropScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TropScalar::NegInf => write!(f, "-inf"),
            TropScalar::Finite(v) => write!(f, "{}", rat_to_string(v)),
        }
    }
}

/// Sign of a rational, as -1 / 0 / 1.
pub fn rat_sign(r: &Rat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}
