use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::EdgeList;
use crate::exact::serialize_decimal;

/// Fraction-free Gaussian elimination. Every division is exact.
pub fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut negate = false;
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        let (head, rest) = m.split_at_mut(k + 1);
        let pivot_row = &head[k];
        for row in rest.iter_mut() {
            let lead = row[k].clone();
            for j in k + 1..n {
                let v = &row[j] * &pivot_row[k] - &lead * &pivot_row[j];
                row[j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Weighted Laplacian with the rows and columns in `removed` deleted.
pub fn laplacian_minor(
    graph: &EdgeList,
    weight: impl Fn(usize, usize) -> i64,
    removed: &[usize],
) -> Vec<Vec<BigInt>> {
    let n = graph.vertex_count;
    let mut lap = vec![vec![0i64; n]; n];
    for &(u, v) in &graph.edges {
        let w = weight(u, v);
        lap[u][u] += w;
        lap[v][v] += w;
        lap[u][v] -= w;
        lap[v][u] -= w;
    }
    let keep: Vec<usize> = (0..n).filter(|i| !removed.contains(i)).collect();
    keep.iter()
        .map(|&i| keep.iter().map(|&j| BigInt::from(lap[i][j])).collect())
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeCount {
    #[serde(serialize_with = "serialize_decimal")]
    pub count: BigUint,
    pub connected: bool,
}

/// Number of spanning trees, as the determinant of the Laplacian with vertex
/// 0 deleted. Disconnected graphs give zero and are flagged.
pub fn matrix_tree_count(graph: &EdgeList) -> TreeCount {
    let connected = graph.is_connected();
    if !connected || graph.vertex_count == 0 {
        return TreeCount {
            count: BigUint::zero(),
            connected,
        };
    }
    let det = bareiss_determinant(laplacian_minor(graph, |_, _| 1, &[0]));
    debug_assert!(!det.is_negative());
    TreeCount {
        count: det.magnitude().clone(),
        connected,
    }
}
