//! Distribution tables for arbitrary vertices.
//!
//! A label `0 k γ` of `H_{m+1}` is reduced to `0 σ_k(γ)` of `H_m`, where
//! `σ_k` swaps pegs 0 and k, then carried up by `E_k · C_m`. Labels starting
//! with another peg are first moved into copy 0 by a peg swap. The reduction
//! stops at a connecting vertex (two digits) or, for the corners of the top
//! level, at the corner table.

use super::connecting::connecting_dist;
use super::outmost::outmost_dist_closed;
use super::transfer::{transfer_matrix, ClassPermutation, TransferMatrix};
use super::{permute_table, DegreeTable, DistVector, VertexDistribution, MAX_DEGREE};
use crate::error::{Error, Result};
use crate::graph::DEFAULT_MAX_LEVEL;
use crate::label::{PegPermutation, VertexLabel};

/// Everything the reduction needs for one top level `n`.
#[derive(Clone, Debug)]
pub struct DegreeContext {
    n: u32,
    corner: DegreeTable,
    /// `connecting[m]` is the table of `01` in `H_m`, for `m = 2..=n`.
    connecting: Vec<Option<DegreeTable>>,
    /// `transfer[m]` is `C_m`, for `m = 1..n`.
    transfer: Vec<Option<TransferMatrix>>,
}

impl DegreeContext {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroLevel);
        }
        let mut connecting = vec![None; n as usize + 1];
        for m in 2..=n {
            connecting[m as usize] = Some(connecting_dist(m - 1)?.connecting_table());
        }
        let mut transfer = vec![None; n as usize + 1];
        for m in 1..n {
            transfer[m as usize] = Some(transfer_matrix(m));
        }
        Ok(DegreeContext {
            n,
            corner: outmost_dist_closed(n).corner_table(),
            connecting,
            transfer,
        })
    }

    pub fn level(&self) -> u32 {
        self.n
    }

    fn check(&self, label: &VertexLabel) -> Result<()> {
        if label.len() > self.n as usize {
            return Err(Error::VertexNotInGraph {
                label: label.to_string(),
                n: self.n,
            });
        }
        Ok(())
    }

    pub fn table(&self, label: &VertexLabel) -> Result<DegreeTable> {
        self.check(label)?;
        Ok(self.table_at(self.n, label))
    }

    pub fn distribution(&self, label: &VertexLabel) -> Result<VertexDistribution> {
        Ok(VertexDistribution {
            n: self.n,
            vertex: label.clone(),
            table: self.table(label)?,
        })
    }

    fn table_at(&self, m: u32, label: &VertexLabel) -> DegreeTable {
        let d = label.digits();
        match d.len() {
            1 => {
                debug_assert_eq!(m, self.n);
                permute_table(&self.corner, PegPermutation::swap(0, d[0]))
            }
            2 => {
                let base = self.connecting[m as usize].as_ref().expect("level >= 2");
                permute_table(base, PegPermutation::sending_01_to(d[0], d[1]))
            }
            _ if d[0] != 0 => {
                let tau = PegPermutation::swap(0, d[0]);
                permute_table(&self.table_at(m, &label.permuted(tau)), tau)
            }
            _ => {
                let k = d[1];
                let sigma = PegPermutation::swap(0, k);
                let inner = VertexLabel::from_raw_digits(
                    std::iter::once(0)
                        .chain(d[2..].iter().map(|&g| sigma.apply(g)))
                        .collect(),
                );
                let below = self.table_at(m - 1, &inner);
                let c = self.transfer[m as usize - 1].as_ref().expect("level >= 1");
                let e = ClassPermutation::for_subcopy(k);
                below.map(|row| c.apply_row(&e.apply_row(&row)))
            }
        }
    }
}

/// Full degree table of `label` in `H_n`.
pub fn vertex_distribution(n: u32, label: &VertexLabel) -> Result<VertexDistribution> {
    DegreeContext::new(n)?.distribution(label)
}

/// `[S, P, T, R, L]` at degree `i` for `label` in `H_n`.
pub fn vertex_dist(n: u32, label: &VertexLabel, i: usize) -> Result<DistVector> {
    if i > MAX_DEGREE {
        return Err(Error::DegreeOutOfRange(i));
    }
    Ok(vertex_distribution(n, label)?.dist_vector(i))
}

/// Tables for every vertex of `H_n`, sorted by label.
pub fn full_distribution_table(n: u32) -> Result<Vec<VertexDistribution>> {
    full_distribution_table_with_limit(n, DEFAULT_MAX_LEVEL)
}

pub fn full_distribution_table_with_limit(n: u32, limit: u32) -> Result<Vec<VertexDistribution>> {
    if n > limit {
        return Err(Error::SizeLimit { n, limit });
    }
    let ctx = DegreeContext::new(n)?;
    let mut labels: Vec<VertexLabel> = (0..3usize.pow(n))
        .map(|i| VertexLabel::from_raw_index(i, n))
        .collect();
    labels.sort();
    let one = |l: VertexLabel| ctx.distribution(&l);
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        labels.into_par_iter().map(one).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        labels.into_iter().map(one).collect()
    }
}
