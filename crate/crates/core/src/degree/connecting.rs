//! Connecting vertices, the six two-digit labels of `H_{n+1}`.
//!
//! Vertex `01` is corner 1 of copy 0, so its series at level `n + 1` come from
//! the level-`n` corner series of corner 1 (equal to those of corner 0 by
//! symmetry). Five series are needed: `s(01)`, `p(01)`, `p(02)`, `p(20)` and
//! `l(01)`; the other connecting vertices follow by peg permutations.

use num_rational::BigRational;

use super::outmost::{outmost_counts, outmost_dist_closed};
use super::recurrence::{eval_counts, eval_normalised, CONNECTING};
use super::{zero_table, DegreeTable, RawDegreeCounts, SubgraphClass};
use crate::count::{count_recursive, ClassRatios};
use crate::error::{Error, Result};
use crate::exact::ExactProb;

const VERTICES: [&str; 5] = ["01", "01", "02", "20", "01"];
const CLASSES: [SubgraphClass; 5] = [
    SubgraphClass::S,
    SubgraphClass::P,
    SubgraphClass::P,
    SubgraphClass::P,
    SubgraphClass::L,
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectingCounts {
    /// Level of the graph the counts refer to (`n + 1`).
    pub level: u32,
    pub s01: RawDegreeCounts,
    pub p01: RawDegreeCounts,
    pub p02: RawDegreeCounts,
    pub p20: RawDegreeCounts,
    pub l01: RawDegreeCounts,
}

impl ConnectingCounts {
    pub fn all(&self) -> [&RawDegreeCounts; 5] {
        [&self.s01, &self.p01, &self.p02, &self.p20, &self.l01]
    }
}

/// Exact counts at the connecting vertices of `H_{n+1}`.
pub fn connecting_counts(n: u32) -> Result<ConnectingCounts> {
    if n == 0 {
        return Err(Error::ZeroLevel);
    }
    let corner = outmost_counts(n)?;
    let sizes = count_recursive(n)?;
    let series = corner.series();
    let mut out: Vec<RawDegreeCounts> = CONNECTING
        .iter()
        .zip(VERTICES.iter().zip(CLASSES))
        .map(|(rec, (v, class))| RawDegreeCounts {
            n: n + 1,
            vertex: v.parse().unwrap(),
            class,
            counts: eval_counts(rec, &series, &sizes),
        })
        .collect();
    let l01 = out.pop().unwrap();
    let p20 = out.pop().unwrap();
    let p02 = out.pop().unwrap();
    let p01 = out.pop().unwrap();
    let s01 = out.pop().unwrap();
    Ok(ConnectingCounts {
        level: n + 1,
        s01,
        p01,
        p02,
        p20,
        l01,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectingDist {
    pub level: u32,
    pub s01: [ExactProb; 4],
    pub p01: [ExactProb; 4],
    pub p02: [ExactProb; 4],
    pub p20: [ExactProb; 4],
    pub l01: [ExactProb; 4],
}

impl ConnectingDist {
    pub fn from_counts(counts: &ConnectingCounts) -> Self {
        let [s01, p01, p02, p20, l01] = counts.all().map(|c| c.probabilities());
        ConnectingDist {
            level: counts.level,
            s01,
            p01,
            p02,
            p20,
            l01,
        }
    }

    /// Table of vertex `01`. The class isolating corner 1 at `01` mirrors `P`
    /// at `02` (swap 1 <-> 2); the class isolating corner 0 at `01` mirrors
    /// `P` at `21`, which equals `P` at `20` (swap 0 <-> 1 fixes corner 2).
    pub fn connecting_table(&self) -> DegreeTable {
        let mut table = zero_table();
        for (i, row) in table.iter_mut().enumerate() {
            *row = [
                self.s01[i].clone(),
                self.p01[i].clone(),
                self.p02[i].clone(),
                self.p20[i].clone(),
                self.l01[i].clone(),
            ];
        }
        table
    }

    pub(crate) fn series(&self) -> [&[ExactProb; 4]; 5] {
        [&self.s01, &self.p01, &self.p02, &self.p20, &self.l01]
    }
}

/// Connecting-vertex probabilities of `H_{n+1}` from the class-normalised
/// recursion, fed by the corner closed forms. Works at any level.
pub fn connecting_dist(n: u32) -> Result<ConnectingDist> {
    if n == 0 {
        return Err(Error::ZeroLevel);
    }
    let corner: [[BigRational; 4]; 4] = outmost_dist_closed(n).series();
    let here = ClassRatios::at(n);
    let next = ClassRatios::at(n + 1);
    let [s01, p01, p02, p20, l01] =
        std::array::from_fn(|k| eval_normalised(&CONNECTING[k], &corner, &here, &next));
    Ok(ConnectingDist {
        level: n + 1,
        s01,
        p01,
        p02,
        p20,
        l01,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use num_bigint::BigUint;

    fn counts(v: [u32; 4]) -> [BigUint; 4] {
        v.map(BigUint::from)
    }

    #[test]
    fn level_two_fixture() {
        let c = connecting_counts(1).unwrap();
        assert_eq!(c.s01.counts, counts([0, 27, 78, 30]));
        assert_eq!(c.s01.total(), 135u32.into());
        assert_eq!(c.p01.counts, counts([0, 9, 81, 30]));
        assert_eq!(c.p02.counts, counts([0, 54, 51, 15]));
        assert_eq!(c.p20.counts, counts([0, 63, 53, 4]));
        assert_eq!(c.l01.counts, counts([0, 165, 134, 21]));
    }

    #[test]
    fn level_two_probabilities() {
        let d = connecting_dist(1).unwrap();
        assert_eq!(d.s01, [rat(0, 1), rat(1, 5), rat(26, 45), rat(2, 9)]);
    }

    #[test]
    fn counts_sum_to_class_sizes() {
        for n in 1..=6 {
            let c = connecting_counts(n).unwrap();
            let sizes = count_recursive(n + 1).unwrap();
            assert_eq!(c.s01.total(), sizes.s);
            for p in [&c.p01, &c.p02, &c.p20] {
                assert_eq!(p.total(), sizes.p);
            }
            assert_eq!(c.l01.total(), sizes.l);
            assert!(c.all().iter().all(|x| x.counts[0] == 0u32.into()));
        }
    }

    #[test]
    fn normalised_route_matches_counts() {
        for n in 1..=8 {
            let from_counts = ConnectingDist::from_counts(&connecting_counts(n).unwrap());
            assert_eq!(connecting_dist(n).unwrap(), from_counts, "level {}", n + 1);
        }
    }
}
