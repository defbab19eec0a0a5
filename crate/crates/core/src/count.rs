//! Sizes of the five spanning-subgraph classes of `H_n`.
//!
//! `s_n` counts spanning trees. `p_n`, `t_n`, `r_n` count two-tree spanning
//! forests separating corner 2, 1 and 0 respectively from the other two
//! corners, and `l_n` counts three-tree forests with every corner in its own
//! tree. Gluing three copies of `H_n` gives exact polynomial recursions for
//! level `n + 1`, which also have closed-form solutions.

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{pow_q, serialize_decimal, ExactCount};

/// Default cap for counting. `s_14` already has about 1.4 million digits.
pub const DEFAULT_MAX_COUNT_LEVEL: u32 = 14;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassVector {
    pub n: u32,
    #[serde(serialize_with = "serialize_decimal")]
    pub s: ExactCount,
    #[serde(serialize_with = "serialize_decimal")]
    pub p: ExactCount,
    #[serde(serialize_with = "serialize_decimal")]
    pub t: ExactCount,
    #[serde(serialize_with = "serialize_decimal")]
    pub r: ExactCount,
    #[serde(serialize_with = "serialize_decimal")]
    pub l: ExactCount,
}

impl ClassVector {
    fn from_spl(n: u32, s: BigUint, p: BigUint, l: BigUint) -> Self {
        ClassVector {
            n,
            s,
            t: p.clone(),
            r: p.clone(),
            p,
            l,
        }
    }

    /// Class sizes in `[S, P, T, R, L]` order.
    pub fn as_array(&self) -> [&ExactCount; 5] {
        [&self.s, &self.p, &self.t, &self.r, &self.l]
    }

    /// One step of the three-copy recursion.
    pub fn next(&self) -> ClassVector {
        let (s, p, l) = (&self.s, &self.p, &self.l);
        let s2 = s * s;
        let s3 = &s2 * s;
        let p2 = p * p;
        let next_s = 3u32 * &s3 + 6u32 * &s2 * p;
        let next_p = &s3 + 7u32 * &s2 * p + 7u32 * s * &p2 + &s2 * l;
        let next_l = &s3
            + 12u32 * &s2 * p
            + 3u32 * &s2 * l
            + 36u32 * s * &p2
            + 12u32 * s * p * l
            + 14u32 * &p2 * p;
        ClassVector::from_spl(self.n + 1, next_s, next_p, next_l)
    }

    pub fn base() -> ClassVector {
        ClassVector::from_spl(1, 3u32.into(), 1u32.into(), 1u32.into())
    }
}

fn check_level(n: u32, limit: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::ZeroLevel);
    }
    if n > limit {
        return Err(Error::SizeLimit { n, limit });
    }
    Ok(())
}

/// Class vectors for levels `1..=n` by iterating the recursion.
pub fn count_sequence(n: u32) -> Result<Vec<ClassVector>> {
    count_sequence_with_limit(n, DEFAULT_MAX_COUNT_LEVEL)
}

pub fn count_sequence_with_limit(n: u32, limit: u32) -> Result<Vec<ClassVector>> {
    check_level(n, limit)?;
    let mut out = Vec::with_capacity(n as usize);
    out.push(ClassVector::base());
    for _ in 1..n {
        let next = out.last().unwrap().next();
        out.push(next);
    }
    Ok(out)
}

pub fn count_recursive(n: u32) -> Result<ClassVector> {
    count_recursive_with_limit(n, DEFAULT_MAX_COUNT_LEVEL)
}

pub fn count_recursive_with_limit(n: u32, limit: u32) -> Result<ClassVector> {
    Ok(count_sequence_with_limit(n, limit)?.pop().unwrap())
}

/// Exponents `(a, b)` with `s_n = 3^a 5^b`.
pub fn tree_count_exponents(n: u32) -> (u64, u64) {
    let t = 3u64.pow(n);
    let n = n as u64;
    ((t + 2 * n - 1) / 4, (t - 2 * n - 1) / 4)
}

fn exact_div(num: BigUint, den: &BigUint, what: &str) -> Result<BigUint> {
    let (q, r) = num.div_rem(den);
    if !r.is_zero() {
        return Err(Error::Inconsistency {
            quantity: format!("closed-form prefactor of {what}"),
            left: format!("remainder {r}"),
            right: "0".into(),
        });
    }
    Ok(q)
}

fn pow_u(base: u32, exp: u64) -> BigUint {
    BigUint::from(base).pow(u32::try_from(exp).expect("exponent fits u32"))
}

pub fn count_closed(n: u32) -> Result<ClassVector> {
    count_closed_with_limit(n, DEFAULT_MAX_COUNT_LEVEL)
}

/// Closed forms. The rational prefactors of `p_n` and `l_n` are divided out
/// exactly; a non-zero remainder is reported as an inconsistency.
pub fn count_closed_with_limit(n: u32, limit: u32) -> Result<ClassVector> {
    check_level(n, limit)?;
    let t = 3u64.pow(n);
    let k = n as u64;
    let (a, b) = tree_count_exponents(n);
    let s = pow_u(3, a) * pow_u(5, b);

    let three_n = pow_u(3, k);
    let five_n = pow_u(5, k);
    let diff = &five_n - &three_n;

    // p_n = (5^n - 3^n) / (6 * 5^n) * 3^((3^n - 2n + 3)/4) * 5^((3^n + 2n - 1)/4)
    let p_num = &diff * pow_u(3, (t + 3 - 2 * k) / 4) * pow_u(5, (t + 2 * k - 1) / 4);
    let p = exact_div(p_num, &(BigUint::from(6u32) * &five_n), "p_n")?;

    // l_n = (3^n - 5^n)^2 / 4 * 3^((3^n - 6n + 3)/4) * 5^((3^n - 2n - 1)/4)
    let l_num = &diff * &diff * pow_u(3, (t + 3 - 6 * k) / 4) * pow_u(5, (t - 2 * k - 1) / 4);
    let l = exact_div(l_num, &BigUint::from(4u32), "l_n")?;

    Ok(ClassVector::from_spl(n, s, p, l))
}

/// Exact class-size ratios at level `n`, small enough to use at any level.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassRatios {
    pub n: u32,
    /// `p_n / s_n = (5^n - 3^n) / (2 * 3^n)`.
    pub p_over_s: BigRational,
    /// `l_n / s_n = 3 (p_n / s_n)^2`.
    pub l_over_s: BigRational,
    /// `s_n^3 / s_{n+1} = 3^(n-1) / 5^n`.
    pub cube_over_next: BigRational,
}

impl ClassRatios {
    pub fn at(n: u32) -> ClassRatios {
        assert!(n >= 1);
        let k = n as i64;
        let rho = (pow_q(5, k) - pow_q(3, k)) / (pow_q(3, k) * pow_q(2, 1));
        ClassRatios {
            n,
            l_over_s: &rho * &rho * pow_q(3, 1),
            p_over_s: rho,
            cube_over_next: pow_q(3, k - 1) / pow_q(5, k),
        }
    }

    /// Class size over `s_n`, in `[S, P, T, R, L]` order.
    pub fn relative_sizes(&self) -> [BigRational; 5] {
        [
            pow_q(1, 0),
            self.p_over_s.clone(),
            self.p_over_s.clone(),
            self.p_over_s.clone(),
            self.l_over_s.clone(),
        ]
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityCheck {
    pub n: u32,
    pub identity: &'static str,
    #[serde(serialize_with = "serialize_decimal")]
    pub lhs: BigUint,
    #[serde(serialize_with = "serialize_decimal")]
    pub rhs: BigUint,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub max_n: u32,
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

pub const IDENTITY_PRODUCT: &str = "s_n * l_n = 3 * p_n^2";
pub const IDENTITY_RATIO: &str = "s_{n+1} * 3^(n-1) = 5^n * s_n^3";
pub const IDENTITY_SYMMETRY: &str = "p_n = t_n = r_n";

/// Checks the structural identities for every level up to `max_n`.
///
/// Failures are entries in the report, not errors.
pub fn verify_identities(max_n: u32) -> Result<IdentityReport> {
    let seq = count_sequence_with_limit(max_n + 1, max_n.max(DEFAULT_MAX_COUNT_LEVEL) + 1)?;
    let mut checks = Vec::new();
    for w in seq.windows(2) {
        let (cur, next) = (&w[0], &w[1]);
        let n = cur.n;
        let lhs = &cur.s * &cur.l;
        let rhs = 3u32 * &cur.p * &cur.p;
        checks.push(IdentityCheck {
            n,
            identity: IDENTITY_PRODUCT,
            holds: lhs == rhs,
            lhs,
            rhs,
        });
        let lhs = &next.s * pow_u(3, n as u64 - 1);
        let rhs = pow_u(5, n as u64) * &cur.s * &cur.s * &cur.s;
        checks.push(IdentityCheck {
            n,
            identity: IDENTITY_RATIO,
            holds: lhs == rhs,
            lhs,
            rhs,
        });
        checks.push(IdentityCheck {
            n,
            identity: IDENTITY_SYMMETRY,
            holds: cur.p == cur.t && cur.t == cur.r,
            lhs: cur.p.clone(),
            rhs: cur.r.clone(),
        });
    }
    Ok(IdentityReport { max_n, checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::count_ratio;

    #[test]
    fn base_and_first_step() {
        let c = count_recursive(1).unwrap();
        assert_eq!((c.s, c.p, c.l), (3u32.into(), 1u32.into(), 1u32.into()));
        let c = count_recursive(2).unwrap();
        assert_eq!(
            (c.s, c.p, c.l),
            (135u32.into(), 120u32.into(), 320u32.into())
        );
        assert_eq!(count_recursive(3).unwrap().s, 20503125u32.into());
    }

    #[test]
    fn level_three_matches_cube_ratio() {
        // s_3 = (5^2 / 3) * s_2^3
        let s2 = BigUint::from(135u32);
        assert_eq!(
            &s2 * &s2 * &s2 * 25u32 / 3u32,
            count_recursive(3).unwrap().s
        );
    }

    #[test]
    fn closed_form_small() {
        let c = count_closed(1).unwrap();
        assert_eq!(c.s, 3u32.into());
        let c = count_closed(2).unwrap();
        assert_eq!((c.s, c.p), (135u32.into(), 120u32.into()));
    }

    #[test]
    fn closed_equals_recursive() {
        for (n, rec) in (1..=9).zip(count_sequence(9).unwrap()) {
            assert_eq!(count_closed(n).unwrap(), rec, "level {n}");
        }
    }

    #[test]
    fn identity_examples() {
        let report = verify_identities(2).unwrap();
        assert!(report.all_hold());
        let first = &report.checks[0];
        assert_eq!(
            (first.lhs.clone(), first.rhs.clone()),
            (3u32.into(), 3u32.into())
        );
        let at2 = report
            .checks
            .iter()
            .find(|c| c.n == 2 && c.identity == IDENTITY_PRODUCT)
            .unwrap();
        assert_eq!(at2.lhs, 43200u32.into());
        // s_2 / s_1^3 = 5
        let ratio = report
            .checks
            .iter()
            .find(|c| c.n == 1 && c.identity == IDENTITY_RATIO)
            .unwrap();
        assert_eq!(ratio.lhs, 135u32.into());
    }

    #[test]
    fn ratios_match_counts() {
        for c in count_sequence(8).unwrap() {
            let r = ClassRatios::at(c.n);
            assert_eq!(r.p_over_s, count_ratio(&c.p, &c.s));
            assert_eq!(r.l_over_s, count_ratio(&c.l, &c.s));
            let next = c.next();
            assert_eq!(
                r.cube_over_next,
                count_ratio(&(&c.s * &c.s * &c.s), &next.s)
            );
        }
    }

    #[test]
    fn level_errors() {
        assert_eq!(count_recursive(0).unwrap_err(), Error::ZeroLevel);
        assert_eq!(count_closed(0).unwrap_err(), Error::ZeroLevel);
        assert!(matches!(count_closed(99), Err(Error::SizeLimit { .. })));
    }

    #[test]
    fn json_uses_decimal_strings() {
        let v = serde_json::to_value(count_recursive(2).unwrap()).unwrap();
        assert_eq!(v["s"], "135");
        assert_eq!(v["l"], "320");
    }
}
