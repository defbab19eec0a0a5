//! Printed closed forms for the connecting-vertex series, transcribed as is so
//! that they can be compared with the values derived from the recursions.
//! Several of them disagree with the derived values; the comparison report
//! records which.

use num_rational::BigRational;
use serde::Serialize;

use super::connecting::connecting_dist;
use crate::error::Result;
use crate::exact::{int, pow_q, serialize_rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PrintedQuantity {
    S01,
    P01,
    P02,
    P20,
    L01,
}

impl PrintedQuantity {
    pub const ALL: [PrintedQuantity; 5] = [
        PrintedQuantity::S01,
        PrintedQuantity::P01,
        PrintedQuantity::P02,
        PrintedQuantity::P20,
        PrintedQuantity::L01,
    ];
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormulaComparison {
    pub quantity: PrintedQuantity,
    pub degree: usize,
    #[serde(serialize_with = "serialize_rational")]
    pub printed: BigRational,
    #[serde(serialize_with = "serialize_rational")]
    pub derived: BigRational,
    pub matches: bool,
}

fn p(base: i64, exp: i64) -> BigRational {
    pow_q(base, exp)
}

/// The fifteen printed values at level `n + 1`, ordered by quantity then
/// degree `1..=3`.
fn printed_values(n: u32) -> [BigRational; 15] {
    let n = n as i64;
    let d = p(5, n + 1) - p(3, n + 1);
    let dd = -d.clone();
    let dd2 = &dd * &dd;
    let c = |k: i64| int(k);
    [
        int(1) / c(14) * p(5, 1 - 2 * n) * (p(15, n) - c(1)),
        int(1) / c(42)
            * (c(30) + c(6) * p(5, 1 - 2 * n) - p(3, 2 + n) * p(5, -n) - c(23) * p(5, -n)),
        int(1) / c(42)
            * (c(12) - c(3) * p(5, 1 - 2 * n) - c(2) * p(3, 1 + n) * p(5, -n) + c(23) * p(5, -n)),
        c(3) * p(5, 1 - 2 * n) * (p(5, n) - p(3, n)) * (p(15, n) - c(1)) / (c(14) * &d),
        (c(7) * p(9, n) * p(5, -n) + c(5) * p(3, 1 - n)
            - c(2) * p(3, n)
            - c(19) * p(5, -n)
            - c(3) * p(5, n + 1))
            / (c(7) * p(3, n + 1) - c(7) * p(5, n + 1)),
        (c(49) * p(3, 1 - n) - c(28) * p(3, n + 1) + p(3, n) * p(5, 3 - 2 * n)
            - c(56) * p(5, 1 - n)
            + c(42) * p(5, n)
            + c(2) * p(5, 2 - n) * p(9, n))
            / (c(14) * &d),
        c(3) * p(5, 1 - 2 * n) * (c(3) * p(5, n) - p(3, n)) * (p(15, n) - c(1)) / (c(14) * &d),
        (c(19) * p(3, 1 - n) + c(19) * p(3, n + 1) + c(2) * p(3, n + 1) * p(5, 1 - 2 * n)
            - c(113) * p(5, -n)
            - c(2) * p(5, n + 2)
            - p(5, -n) * p(9, n + 1))
            / (c(14) * &dd),
        p(75, -n)
            * (c(106) * p(3, n) * p(5, n + 1)
                - c(125) * p(9, n)
                - c(453) * p(25, n)
                - c(2) * p(5, n + 2) * p(27, n)
                + c(184) * p(225, n)
                - c(86) * p(375, n))
            / (c(14) * &dd),
        p(25, -n)
            * (c(5) * p(3, n) + c(21) * p(5, n) + c(7) * p(3, n) * p(5, 2 * n + 1)
                - p(5, n + 1) * p(9, n))
            / (c(14) * &d),
        (c(55) * p(3, -n) - c(19) * p(3, n + 1) + p(3, n) * p(5, 1 - 2 * n) - c(11) * p(5, 1 - n)
            + c(2) * p(5, n + 2)
            + p(5, -n) * p(9, n + 1))
            / (c(14) * &d),
        p(75, -n)
            * (c(95) * p(9, n)
                - c(38) * p(15, n)
                - c(77) * p(25, n)
                - c(14) * p(3, n + 1) * p(125, n)
                + c(38) * p(135, n)
                + c(52) * p(225, n))
            / (c(14) * &dd),
        p(25, -n)
            * (c(37) * p(3, n) * p(5, 3 * n + 1) - c(25) * p(9, n)
                + c(38) * p(15, n)
                + c(39) * p(25, n)
                - c(2) * p(3, 2 * n + 1) * p(25, n + 1)
                + p(5, n + 2) * p(27, n))
            / (c(14) * &dd2),
        p(75, -n)
            * (-p(3, 4 * n + 3) * p(5, n) + c(27) * p(5, 3 * n + 1)
                - c(29) * p(3, 2 * n + 1) * p(5, 3 * n + 1)
                + c(2) * p(3, n) * p(5, 4 * n + 3))
            / (c(14) * &dd2)
            + p(75, -n)
                * (c(20) * p(27, n) + c(8) * p(25, n) * p(27, n + 1)
                    - c(13) * p(45, n)
                    - c(188) * p(75, n))
                / (c(14) * &dd2),
        p(75, -n)
            * (-c(319) * p(3, n + 1) * p(25, n)
                + c(62) * p(3, 3 * n + 1) * p(25, n)
                + c(65) * p(27, n))
            / (c(14) * &dd2)
            + p(75, -n)
                * (c(199) * p(45, n) + c(789) * p(125, n) + c(26) * p(405, n)
                    - c(562) * p(1125, n)
                    + c(254) * p(1875, n))
                / (c(14) * &dd2),
    ]
}

/// Compares each printed formula with the derived value at the connecting
/// vertices of `H_{n+1}`.
pub fn printed_connecting_report(n: u32) -> Result<Vec<FormulaComparison>> {
    let derived = connecting_dist(n)?;
    let series = derived.series();
    let printed = printed_values(n);
    let mut out = Vec::with_capacity(15);
    for (q, quantity) in PrintedQuantity::ALL.into_iter().enumerate() {
        for degree in 1..=3 {
            let printed = printed[3 * q + degree - 1].clone();
            let derived = series[q][degree].clone();
            out.push(FormulaComparison {
                quantity,
                degree,
                matches: printed == derived,
                printed,
                derived,
            });
        }
    }
    Ok(out)
}
