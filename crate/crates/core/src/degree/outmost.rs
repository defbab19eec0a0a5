//! Corner vertices.
//!
//! By symmetry a corner needs four series: `s(0)`, `p(0)` (forests isolating
//! corner 2, seen at corner 0), `p(2)` (the same forests seen at corner 2) and
//! `l(0)`. A corner has degree 2 in `H_n`, so index 3 is always zero.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;

use super::recurrence::{eval_counts, eval_normalised, OUTMOST};
use super::{zero_table, DegreeTable, RawDegreeCounts, SubgraphClass};
use crate::count::{count_sequence, ClassRatios, ClassVector};
use crate::error::{Error, Result};
use crate::exact::{int, pow_q, rat, to_rational, ExactProb};
use crate::label::VertexLabel;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OutmostCounts {
    pub n: u32,
    pub s0: RawDegreeCounts,
    pub p0: RawDegreeCounts,
    pub p2: RawDegreeCounts,
    pub l0: RawDegreeCounts,
}

fn raw(n: u32, vertex: u8, class: SubgraphClass, counts: [BigUint; 4]) -> RawDegreeCounts {
    RawDegreeCounts {
        n,
        vertex: VertexLabel::outmost(vertex),
        class,
        counts,
    }
}

fn counts(v: [u32; 4]) -> [BigUint; 4] {
    v.map(BigUint::from)
}

impl OutmostCounts {
    fn base() -> Self {
        OutmostCounts::from_series(
            1,
            [
                counts([0, 2, 1, 0]),
                counts([0, 1, 0, 0]),
                counts([1, 0, 0, 0]),
                counts([1, 0, 0, 0]),
            ],
        )
    }

    fn from_series(n: u32, [s, p, q, l]: [[BigUint; 4]; 4]) -> Self {
        OutmostCounts {
            n,
            s0: raw(n, 0, SubgraphClass::S, s),
            p0: raw(n, 0, SubgraphClass::P, p),
            p2: raw(n, 2, SubgraphClass::P, q),
            l0: raw(n, 0, SubgraphClass::L, l),
        }
    }

    pub(crate) fn series(&self) -> [[BigUint; 4]; 4] {
        [
            self.s0.counts.clone(),
            self.p0.counts.clone(),
            self.p2.counts.clone(),
            self.l0.counts.clone(),
        ]
    }

    fn next(&self, sizes: &ClassVector) -> Self {
        let series = self.series();
        OutmostCounts::from_series(
            self.n + 1,
            std::array::from_fn(|k| eval_counts(&OUTMOST[k], &series, sizes)),
        )
    }
}

/// Corner degree counts at level `n`, by iterating the corner recursion.
pub fn outmost_counts(n: u32) -> Result<OutmostCounts> {
    Ok(outmost_count_sequence(n)?.pop().unwrap())
}

pub(crate) fn outmost_count_sequence(n: u32) -> Result<Vec<OutmostCounts>> {
    let sizes = count_sequence(n)?;
    let mut out = vec![OutmostCounts::base()];
    for level in &sizes[..sizes.len() - 1] {
        let next = out.last().unwrap().next(level);
        out.push(next);
    }
    Ok(out)
}

/// Corner probabilities: `S(0)`, `P(0)`, `P(2)`, `L(0)`, each indexed by degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OutmostDist {
    pub n: u32,
    pub s0: [ExactProb; 4],
    pub p0: [ExactProb; 4],
    pub p2: [ExactProb; 4],
    pub l0: [ExactProb; 4],
}

impl OutmostDist {
    pub(crate) fn series(&self) -> [[BigRational; 4]; 4] {
        [
            self.s0.clone(),
            self.p0.clone(),
            self.p2.clone(),
            self.l0.clone(),
        ]
    }

    fn from_series(n: u32, [s0, p0, p2, l0]: [[BigRational; 4]; 4]) -> Self {
        OutmostDist { n, s0, p0, p2, l0 }
    }

    /// Table of corner `0`. The class isolating corner 1 looks like `P` from
    /// corner 0 by the 1 <-> 2 symmetry, and the class isolating corner 0 looks
    /// like `P` seen from corner 2 by the 0 <-> 2 symmetry.
    pub fn corner_table(&self) -> DegreeTable {
        let mut table = zero_table();
        for (i, row) in table.iter_mut().enumerate() {
            *row = [
                self.s0[i].clone(),
                self.p0[i].clone(),
                self.p0[i].clone(),
                self.p2[i].clone(),
                self.l0[i].clone(),
            ];
        }
        table
    }
}

/// Closed forms for the corner probabilities at any level.
pub fn outmost_dist_closed(n: u32) -> OutmostDist {
    assert!(n >= 1);
    let k = n as i64;
    let a = pow_q(3, k);
    let b = pow_q(5, k);
    let q = pow_q(15, -k);
    let f = pow_q(15, k);
    let one = int(1);
    let z = BigRational::zero;
    let d = &b - &a;

    let s1 = rat(5, 7) - rat(5, 7) * &q;
    let s2 = rat(2, 7) + rat(5, 7) * &q;

    let pt = (int(9) * &b + int(5) * &a) / (int(7) * &f * &d);
    let p1 = rat(5, 7) + &pt;
    let p2 = rat(2, 7) - &pt;

    let u = (&f - &one) / (int(7) * &b * &d);
    let q0 = int(5) * &u;
    let q1 = rat(5, 7) - rat(12, 7) * &q - int(3) * &u;
    let q2 = rat(2, 7) + rat(12, 7) * &q - int(2) * &u;

    let d2 = &d * &d;
    let l0 = int(10) * &a / (int(21) * &d) + (int(18) * &b + int(10) * &a) / (int(21) * &b * &d2);
    let l1 = rat(5, 7) + rat(9, 7) * &q - int(2) * &u - int(8) * &a / (int(3) * &b * &d2);
    let l2 = rat(2, 7) - rat(9, 7) * &q - int(4) * (&f + int(6)) / (int(21) * &b * &d)
        + int(4) * &a / (int(3) * &b * &d2);

    OutmostDist {
        n,
        s0: [z(), s1, s2, z()],
        p0: [z(), p1, p2, z()],
        p2: [q0, q1, q2, z()],
        l0: [l0, l1, l2, z()],
    }
}

/// Corner probabilities from the closed forms, checked exactly against the
/// integer recursion (`count * den == num * class size` for every entry).
pub fn outmost_dist(n: u32) -> Result<OutmostDist> {
    let closed = outmost_dist_closed(n);
    let raw = outmost_counts(n)?;
    let names = ["S(0)", "P(0)", "P(2)", "L(0)"];
    let series = [&raw.s0, &raw.p0, &raw.p2, &raw.l0];
    for ((name, counts), probs) in names.iter().zip(series).zip(closed.series()) {
        let total = BigInt::from(counts.total());
        for (i, (c, p)) in counts.counts.iter().zip(&probs).enumerate() {
            let lhs = BigInt::from(c.clone()) * p.denom();
            let rhs = p.numer() * &total;
            if lhs != rhs {
                return Err(Error::Inconsistency {
                    quantity: format!("{name} at degree {i}, level {n}"),
                    left: format!("{}/{}", c, total),
                    right: p.to_string(),
                });
            }
        }
    }
    Ok(closed)
}

/// Corner probabilities by iterating the class-normalised recursion, a
/// second route that never forms the large counts.
pub fn outmost_dist_recursive(n: u32) -> OutmostDist {
    assert!(n >= 1);
    let base = OutmostCounts::base();
    let sizes = ClassVector::base();
    let totals = [&sizes.s, &sizes.p, &sizes.p, &sizes.l];
    let mut series: [[BigRational; 4]; 4] = std::array::from_fn(|k| {
        let c = &base.series()[k];
        std::array::from_fn(|i| to_rational(&c[i]) / to_rational(totals[k]))
    });
    for level in 1..n {
        let here = ClassRatios::at(level);
        let next = ClassRatios::at(level + 1);
        series = std::array::from_fn(|k| eval_normalised(&OUTMOST[k], &series, &here, &next));
    }
    OutmostDist::from_series(n, series)
}
