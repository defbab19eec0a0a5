use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::determinant::{bareiss_determinant, laplacian_minor};
use super::EdgeList;
use crate::error::{Error, Result};
use crate::graph::HanoiGraph;
use crate::label::VertexLabel;

/// `coeffs[i]`: number of spanning trees in which `vertex` has degree `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreePolynomial {
    pub vertex: VertexLabel,
    pub coeffs: [BigUint; 4],
}

impl DegreePolynomial {
    pub fn total(&self) -> BigUint {
        self.coeffs.iter().sum()
    }
}

impl Serialize for DegreePolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        let mut st = serializer.serialize_struct("DegreePolynomial", 2)?;
        st.serialize_field("vertex", &self.vertex)?;
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

fn map_points<T: Send>(points: usize, f: impl Fn(i64) -> T + Sync + Send) -> Vec<T> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (0..points as i64).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..points as i64).map(f).collect()
    }
}

/// Coefficients of the polynomial through `(x, values[x])`, `x = 0..len`.
fn interpolate(values: &[BigInt]) -> Vec<BigRational> {
    let k = values.len();
    let mut out = vec![BigRational::zero(); k];
    for (i, y) in values.iter().enumerate() {
        // Basis polynomial prod_{j != i} (x - j) / (i - j), lowest degree first.
        let mut basis = vec![BigRational::from_integer(1.into())];
        let mut denom = BigInt::from(1);
        for j in (0..k).filter(|&j| j != i) {
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (d, c) in basis.iter().enumerate() {
                next[d + 1] += c;
                next[d] -= c * BigRational::from_integer(BigInt::from(j));
            }
            basis = next;
            denom *= BigInt::from(i as i64 - j as i64);
        }
        let scale = BigRational::new(y.clone(), denom);
        for (o, b) in out.iter_mut().zip(&basis) {
            *o += b * &scale;
        }
    }
    out
}

fn to_count(q: &BigRational, what: &str) -> Result<BigUint> {
    if !q.is_integer() || q.is_negative() {
        return Err(Error::Inconsistency {
            quantity: what.to_string(),
            left: q.to_string(),
            right: "a non-negative integer".to_string(),
        });
    }
    Ok(q.to_integer().magnitude().clone())
}

/// Evaluates `eval(x)` at enough points for a polynomial of degree
/// `max(deg(v), 3)` and returns its coefficients, padded to four.
fn degree_coefficients(
    graph: &EdgeList,
    v: usize,
    eval: impl Fn(i64) -> BigInt + Sync + Send,
    what: &str,
) -> Result<Vec<BigUint>> {
    let points = graph.degree(v).max(3) + 1;
    let values = map_points(points, eval);
    interpolate(&values)
        .iter()
        .map(|q| to_count(q, what))
        .collect()
}

/// Spanning-tree degree polynomial of vertex `v` in a generic graph, from the
/// Laplacian whose edges at `v` carry weight `x`.
pub fn degree_poly_at(graph: &EdgeList, v: usize) -> Result<Vec<BigUint>> {
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    let eval = |x: i64| {
        let w = |a: usize, b: usize| if a == v || b == v { x } else { 1 };
        bareiss_determinant(laplacian_minor(graph, w, &[0]))
    };
    degree_coefficients(graph, v, eval, "degree polynomial")
}

fn fit_four(coeffs: Vec<BigUint>) -> Result<[BigUint; 4]> {
    if coeffs.iter().skip(4).any(|c| !c.is_zero()) {
        return Err(Error::DegreeOutOfRange(coeffs.len() - 1));
    }
    Ok(std::array::from_fn(|i| {
        coeffs.get(i).cloned().unwrap_or_default()
    }))
}

/// Degree polynomial of a labelled vertex of a Hanoi graph.
pub fn degree_poly(graph: &HanoiGraph, vertex: &VertexLabel) -> Result<DegreePolynomial> {
    let v = graph.require_vertex(vertex)?;
    let coeffs = fit_four(degree_poly_at(&EdgeList::from(graph), v)?)?;
    Ok(DegreePolynomial {
        vertex: vertex.clone(),
        coeffs,
    })
}

/// Sizes of the classes `[S, P, T, R, L]` relative to three marked corners,
/// under an edge weighting. A two-tree forest separating `a` from `b`
/// has the third corner on one side or the other, so
/// `f(a|b) = X_a + X_b` where `X_c` counts forests with `c` alone.
pub fn forest_class_counts(
    graph: &EdgeList,
    corners: [usize; 3],
    weight: impl Fn(usize, usize) -> i64 + Copy,
) -> [BigInt; 5] {
    let [c0, c1, c2] = corners;
    let det = |removed: &[usize]| bareiss_determinant(laplacian_minor(graph, weight, removed));
    let s = det(&[c0]);
    let f01 = det(&[c0, c1]);
    let f02 = det(&[c0, c2]);
    let f12 = det(&[c1, c2]);
    let l = det(&[c0, c1, c2]);
    let two = BigInt::from(2);
    let x2 = (&f02 + &f12 - &f01) / &two;
    let x1 = (&f01 + &f12 - &f02) / &two;
    let x0 = (&f01 + &f02 - &f12) / &two;
    [s, x2, x1, x0, l]
}

/// Degree polynomials of a labelled vertex over each class, `[class][i]`.
pub fn forest_class_degree_polys(
    graph: &HanoiGraph,
    vertex: &VertexLabel,
) -> Result<[[BigUint; 4]; 5]> {
    let v = graph.require_vertex(vertex)?;
    let corners = [0u8, 1, 2].map(|p| graph.vertex(&VertexLabel::outmost(p)).unwrap());
    let edges = EdgeList::from(graph);
    let points = edges.degree(v).max(3) + 1;
    let values = map_points(points, |x| {
        forest_class_counts(
            &edges,
            corners,
            move |a, b| {
                if a == v || b == v {
                    x
                } else {
                    1
                }
            },
        )
    });
    let mut out: [[BigUint; 4]; 5] = Default::default();
    for (class, slot) in out.iter_mut().enumerate() {
        let series: Vec<BigInt> = values.iter().map(|vals| vals[class].clone()).collect();
        let coeffs = interpolate(&series)
            .iter()
            .map(|q| to_count(q, "forest-class degree polynomial"))
            .collect::<Result<Vec<_>>>()?;
        *slot = fit_four(coeffs)?;
    }
    Ok(out)
}
