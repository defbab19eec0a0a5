//! Exact degree distributions of vertices over spanning trees and over the
//! two- and three-tree forest classes.
//!
//! Every quantity for a vertex `v` of `H_n` is kept as a [`DegreeTable`]:
//! rows are the degree `i = 0..=3`, columns the classes `[S, P, T, R, L]`,
//! and entry `(i, X)` is the fraction of class-`X` subgraphs in which `v` has
//! degree `i`. Corners and connecting vertices are base cases, computed from
//! the outmost and connecting recursions; every other vertex is reached by the
//! transfer-matrix recursion in [`vertex`].

mod connecting;
mod outmost;
mod printed;
mod recurrence;
mod transfer;
mod vertex;

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::exact::{serialize_decimal, ExactCount, ExactProb, RationalJson};
use crate::label::{PegPermutation, VertexLabel};

pub use connecting::{connecting_counts, connecting_dist, ConnectingCounts, ConnectingDist};
pub use outmost::{
    outmost_counts, outmost_dist, outmost_dist_closed, outmost_dist_recursive, OutmostCounts,
    OutmostDist,
};
pub use printed::{printed_connecting_report, FormulaComparison, PrintedQuantity};
pub use transfer::{transfer_matrix, ClassPermutation, TransferMatrix};
pub use vertex::{
    full_distribution_table, full_distribution_table_with_limit, vertex_dist, vertex_distribution,
    DegreeContext,
};

pub const MAX_DEGREE: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SubgraphClass {
    /// Spanning trees.
    S,
    /// Two trees, corner 2 separated from corners 0 and 1.
    P,
    /// Two trees, corner 1 separated from corners 0 and 2.
    T,
    /// Two trees, corner 0 separated from corners 1 and 2.
    R,
    /// Three trees, one per corner.
    L,
}

impl SubgraphClass {
    pub const ALL: [SubgraphClass; 5] = [
        SubgraphClass::S,
        SubgraphClass::P,
        SubgraphClass::T,
        SubgraphClass::R,
        SubgraphClass::L,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    /// The two-tree class whose lone corner is `peg`.
    pub fn isolating(peg: u8) -> SubgraphClass {
        match peg {
            0 => SubgraphClass::R,
            1 => SubgraphClass::T,
            2 => SubgraphClass::P,
            _ => panic!("peg out of range"),
        }
    }
}

impl fmt::Display for SubgraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// One probability per class, in `[S, P, T, R, L]` order.
pub type ClassRow = [ExactProb; 5];

/// `table[i][class]`: probability that the vertex has degree `i` in a uniform
/// member of `class`.
pub type DegreeTable = [ClassRow; 4];

pub(crate) fn zero_row() -> ClassRow {
    std::array::from_fn(|_| BigRational::zero())
}

pub(crate) fn zero_table() -> DegreeTable {
    std::array::from_fn(|_| zero_row())
}

/// Transports a table along a peg permutation: given the table of `v`,
/// returns the table of `sigma(v)`. Spanning trees and three-tree forests are
/// permutation invariant; the class isolating corner `j` at `v` becomes the
/// class isolating `sigma(j)` at `sigma(v)`.
pub fn permute_table(table: &DegreeTable, sigma: PegPermutation) -> DegreeTable {
    let mut out = table.clone();
    for (row_out, row_in) in out.iter_mut().zip(table) {
        for j in 0..3u8 {
            let from = SubgraphClass::isolating(j).index();
            let to = SubgraphClass::isolating(sigma.apply(j)).index();
            row_out[to] = row_in[from].clone();
        }
    }
    out
}

/// Degree counts of one vertex over one subgraph class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RawDegreeCounts {
    pub n: u32,
    pub vertex: VertexLabel,
    pub class: SubgraphClass,
    #[serde(serialize_with = "serialize_counts")]
    pub counts: [ExactCount; 4],
}

fn serialize_counts<S: Serializer>(c: &[ExactCount; 4], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(c.iter().map(|x| x.to_string()))
}

impl RawDegreeCounts {
    pub fn total(&self) -> ExactCount {
        self.counts.iter().sum()
    }

    pub fn probabilities(&self) -> [ExactProb; 4] {
        let total = self.total();
        std::array::from_fn(|i| crate::exact::count_ratio(&self.counts[i], &total))
    }
}

/// The class vector `[S, P, T, R, L]` of one vertex at one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistVector {
    pub n: u32,
    pub vertex: VertexLabel,
    pub degree: usize,
    pub components: ClassRow,
}

impl DistVector {
    pub fn get(&self, class: SubgraphClass) -> &ExactProb {
        &self.components[class.index()]
    }

    /// Probability of this degree among spanning trees.
    pub fn tree_probability(&self) -> &ExactProb {
        self.get(SubgraphClass::S)
    }
}

impl Serialize for DistVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("DistVector", 8)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("vertex", &self.vertex)?;
        st.serialize_field("i", &self.degree)?;
        for class in SubgraphClass::ALL {
            let name: &'static str = match class {
                SubgraphClass::S => "S",
                SubgraphClass::P => "P",
                SubgraphClass::T => "T",
                SubgraphClass::R => "R",
                SubgraphClass::L => "L",
            };
            st.serialize_field(name, &RationalJson(self.get(class)))?;
        }
        st.end()
    }
}

/// Full degree table of one vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexDistribution {
    pub n: u32,
    pub vertex: VertexLabel,
    pub table: DegreeTable,
}

impl VertexDistribution {
    pub fn dist_vector(&self, degree: usize) -> DistVector {
        DistVector {
            n: self.n,
            vertex: self.vertex.clone(),
            degree,
            components: self.table[degree].clone(),
        }
    }

    /// `S_{n,i}(v)` for `i = 0..=3`.
    pub fn tree_probabilities(&self) -> [ExactProb; 4] {
        std::array::from_fn(|i| self.table[i][SubgraphClass::S.index()].clone())
    }

    pub fn class_probabilities(&self, class: SubgraphClass) -> [ExactProb; 4] {
        std::array::from_fn(|i| self.table[i][class.index()].clone())
    }

    /// Expected degree in a uniform spanning tree.
    pub fn expected_tree_degree(&self) -> ExactProb {
        self.tree_probabilities()
            .iter()
            .enumerate()
            .map(|(i, p)| p * BigRational::from_integer((i as i64).into()))
            .sum()
    }

    /// Whether every class column sums to one.
    pub fn is_normalised(&self) -> bool {
        SubgraphClass::ALL.iter().all(|&c| {
            self.class_probabilities(c)
                .iter()
                .sum::<BigRational>()
                .is_one()
        })
    }
}

/// Exact distribution row for serialisation in tables and CSV.
#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    pub vertex: VertexLabel,
    pub i: usize,
    #[serde(serialize_with = "serialize_decimal")]
    pub numerator: num_bigint::BigInt,
    #[serde(serialize_with = "serialize_decimal")]
    pub denominator: num_bigint::BigInt,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn permutation_moves_two_tree_classes() {
        let mut t = zero_table();
        t[1] = [rat(1, 2), rat(1, 3), rat(1, 5), rat(1, 7), rat(1, 11)];
        // swap(0, 1): T (iso 1) <-> R (iso 0), P fixed
        let out = permute_table(&t, PegPermutation::swap(0, 1));
        assert_eq!(
            out[1],
            [rat(1, 2), rat(1, 3), rat(1, 7), rat(1, 5), rat(1, 11)]
        );
        let back = permute_table(&out, PegPermutation::swap(0, 1));
        assert_eq!(back, t);
    }

    #[test]
    fn class_isolation_convention() {
        assert_eq!(SubgraphClass::isolating(2), SubgraphClass::P);
        assert_eq!(SubgraphClass::isolating(1), SubgraphClass::T);
        assert_eq!(SubgraphClass::isolating(0), SubgraphClass::R);
    }
}
