//! Spanning-tree entropy `ln(s_n) / 3^n` and its limit `(ln 3 + ln 5) / 4`.
//!
//! Since `s_n = 3^a 5^b` exactly, the entropy is a rational combination of
//! `ln 3` and `ln 5`, evaluated here in big-integer fixed point.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::count::tree_count_exponents;
use crate::error::{Error, Result};

/// Decimal places carried in rendered entropy values.
pub const ENTROPY_DIGITS: usize = 60;
const GUARD_DIGITS: usize = 20;

/// Known entropies of other cubic lattices, for comparison only.
pub const HONEYCOMB_ENTROPY: f64 = 0.807;
pub const LATTICE_488_ENTROPY: f64 = 0.787;
pub const LATTICE_31212_ENTROPY: f64 = 0.721;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EntropyLevel {
    Finite(u32),
    Infinite,
}

impl fmt::Display for EntropyLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EntropyLevel::Finite(n) => write!(f, "{n}"),
            EntropyLevel::Infinite => f.write_str("inf"),
        }
    }
}

impl std::str::FromStr for EntropyLevel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "inf" | "infinity" | "∞" => Ok(EntropyLevel::Infinite),
            _ => match s.parse::<u32>() {
                Ok(0) => Err(Error::ZeroLevel),
                Ok(n) => Ok(EntropyLevel::Finite(n)),
                Err(_) => Err(Error::InvalidLabel {
                    label: s.to_string(),
                    reason: "level must be a positive integer or 'inf'",
                }),
            },
        }
    }
}

impl Serialize for EntropyLevel {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            EntropyLevel::Finite(n) => serializer.serialize_u32(*n),
            EntropyLevel::Infinite => serializer.serialize_str("inf"),
        }
    }
}

/// Entropy as a fixed-point decimal with [`ENTROPY_DIGITS`] places.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntropyValue {
    pub level: EntropyLevel,
    /// `value * 10^ENTROPY_DIGITS`, truncated.
    scaled: BigInt,
}

impl EntropyValue {
    pub fn decimal(&self) -> String {
        let (int, frac) = self
            .scaled
            .div_rem(&BigInt::from(10u32).pow(ENTROPY_DIGITS as u32));
        format!(
            "{}.{:0>width$}",
            int,
            frac.to_string(),
            width = ENTROPY_DIGITS
        )
    }

    pub fn to_f64(&self) -> f64 {
        self.decimal().parse().unwrap()
    }

    pub fn scaled(&self) -> &BigInt {
        &self.scaled
    }
}

impl fmt::Display for EntropyValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.decimal())
    }
}

impl Serialize for EntropyValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// `atanh(1/x) * scale`, summed until terms vanish.
fn atanh_recip(x: u64, scale: &BigInt) -> BigInt {
    let x2 = BigInt::from(x * x);
    let mut power = scale / BigInt::from(x);
    let mut sum = BigInt::zero();
    let mut k = 1u64;
    while !power.is_zero() {
        sum += &power / BigInt::from(k);
        power /= &x2;
        k += 2;
    }
    sum
}

/// `(ln 3, ln 5)` scaled by `10^digits`.
fn ln3_ln5(digits: usize) -> (BigInt, BigInt) {
    let scale = BigInt::from(10u32).pow(digits as u32);
    // ln 2 = 2 atanh(1/3), ln(3/2) = 2 atanh(1/5), ln(5/4) = 2 atanh(1/9)
    let ln2 = 2 * atanh_recip(3, &scale);
    let ln3 = &ln2 + 2 * atanh_recip(5, &scale);
    let ln5 = 2 * &ln2 + 2 * atanh_recip(9, &scale);
    (ln3, ln5)
}

pub fn entropy(level: EntropyLevel) -> EntropyValue {
    let work = ENTROPY_DIGITS + GUARD_DIGITS;
    let (ln3, ln5) = ln3_ln5(work);
    let guard = BigInt::from(10u32).pow(GUARD_DIGITS as u32);
    let value = match level {
        EntropyLevel::Infinite => (ln3 + ln5) / 4,
        EntropyLevel::Finite(n) => {
            let (a, b) = tree_count_exponents(n);
            (BigInt::from(a) * ln3 + BigInt::from(b) * ln5) / BigInt::from(3u32).pow(n)
        }
    };
    EntropyValue {
        level,
        scaled: value / guard,
    }
}

/// Entropy at level `n` as a plain float.
pub fn entropy_f64(n: u32) -> f64 {
    let (a, b) = tree_count_exponents(n);
    let v = 3f64.powi(n as i32);
    (a.to_f64().unwrap() * 3f64.ln() + b.to_f64().unwrap() * 5f64.ln()) / v
}
