//! Exact-number helpers shared by the counting and distribution code.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// Non-negative arbitrary-precision count.
pub type ExactCount = BigUint;
/// Exact rational, always kept in lowest terms by `num-rational`.
pub type ExactProb = BigRational;

pub fn big(n: u64) -> BigInt {
    BigInt::from(n)
}

pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `base^exp` for any integer exponent, as an exact rational.
pub fn pow_q(base: i64, exp: i64) -> BigRational {
    let p = BigInt::from(base).pow(exp.unsigned_abs() as u32);
    if exp >= 0 {
        BigRational::from_integer(p)
    } else {
        BigRational::new(BigInt::one(), p)
    }
}

pub fn to_rational(n: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(n.clone()))
}

/// `num / den` for counts, in lowest terms.
pub fn count_ratio(num: &BigUint, den: &BigUint) -> BigRational {
    BigRational::new(BigInt::from(num.clone()), BigInt::from(den.clone()))
}

/// Converts to `f64` without overflowing on huge numerators and denominators.
pub fn approx_f64(q: &BigRational) -> f64 {
    if q.is_zero() {
        return 0.0;
    }
    if let (Some(n), Some(d)) = (q.numer().to_f64(), q.denom().to_f64()) {
        if n.is_finite() && d.is_finite() {
            return n / d;
        }
    }
    // Shift both sides down to ~60 significant bits.
    let nb = q.numer().bits() as i64;
    let db = q.denom().bits() as i64;
    let ns = (nb - 60).max(0) as usize;
    let ds = (db - 60).max(0) as usize;
    let n = (q.numer().abs() >> ns).to_f64().unwrap();
    let d = (q.denom() >> ds).to_f64().unwrap();
    let mag = n / d * 2f64.powi((ns as i64 - ds as i64) as i32);
    if q.is_negative() {
        -mag
    } else {
        mag
    }
}

/// Renders with 17 significant digits.
pub fn format_float(q: &BigRational) -> String {
    format!("{:.16e}", approx_f64(q))
}

/// Serialises a rational as `{"num": "...", "den": "..."}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalJson<'a>(pub &'a BigRational);

impl Serialize for RationalJson<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Rational", 2)?;
        st.serialize_field("num", &self.0.numer().to_string())?;
        st.serialize_field("den", &self.0.denom().to_string())?;
        st.end()
    }
}

/// `serde(serialize_with)` helper rendering big integers as decimal strings.
pub fn serialize_decimal<S: Serializer, T: std::fmt::Display>(
    value: &T,
    serializer: S,
) -> Result<S::Ok, S::Error> {
    serializer.collect_str(value)
}

pub fn serialize_rational<S: Serializer>(
    q: &BigRational,
    serializer: S,
) -> Result<S::Ok, S::Error> {
    RationalJson(q).serialize(serializer)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn negative_powers() {
        assert_eq!(pow_q(5, -2), rat(1, 25));
        assert_eq!(pow_q(3, 0), int(1));
    }

    #[test]
    fn float_of_huge_ratio() {
        let n = BigInt::from(2).pow(5000) * 3;
        let d = BigInt::from(2).pow(5000) * 4;
        let q = BigRational::new_raw(n, d);
        assert!((approx_f64(&q) - 0.75).abs() < 1e-15);
        assert_eq!(format_float(&rat(1, 3)), "3.3333333333333331e-1");
    }
}
