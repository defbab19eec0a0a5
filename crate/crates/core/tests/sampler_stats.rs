use std::collections::HashMap;

use hanoi_trees::count::count_recursive;
use hanoi_trees::exact::rat;
use hanoi_trees::oracle::{enumerate_trees, EdgeList};
use hanoi_trees::sampler::{
    empirical_degree_report, sample_tree, split_seed, SampleReport, Z_BOUND,
};
use hanoi_trees::HanoiGraph;
use num_rational::BigRational;
use statrs::distribution::{ChiSquared, ContinuousCDF};

fn label(s: &str) -> hanoi_trees::VertexLabel {
    s.parse().unwrap()
}

fn freq_sum(r: &SampleReport) -> BigRational {
    r.degrees.iter().map(|d| d.empirical_freq.clone()).sum()
}

#[test]
fn triangle_trees_are_uniform() {
    let g = HanoiGraph::build(1).unwrap();
    let n = 100_000u64;
    let mut seen: HashMap<Vec<(usize, usize)>, u64> = HashMap::new();
    for k in 0..n {
        *seen.entry(sample_tree(&g, split_seed(11, k))).or_default() += 1;
    }
    assert_eq!(seen.len(), 3);
    let sigma = ((1.0 / 3.0) * (2.0 / 3.0) / n as f64).sqrt();
    for &c in seen.values() {
        assert!((c as f64 / n as f64 - 1.0 / 3.0).abs() < Z_BOUND * sigma);
    }
}

#[test]
fn triangle_corner_report() {
    let g = HanoiGraph::build(1).unwrap();
    let r = empirical_degree_report(&g, &label("0"), 10_000, 5).unwrap();
    assert_eq!(r.degrees[0].exact_prob, rat(2, 3));
    assert_eq!(r.degrees[1].exact_prob, rat(1, 3));
    assert!(r.within(Z_BOUND), "{r:?}");
}

#[test]
fn h2_corner_report() {
    let g = HanoiGraph::build(2).unwrap();
    let r = empirical_degree_report(&g, &label("0"), 100_000, 2024).unwrap();
    assert_eq!(r.degrees[0].exact_prob, rat(32, 45));
    assert!(r.within(Z_BOUND), "{r:?}");
    assert_eq!(freq_sum(&r), rat(1, 1));
}

#[test]
fn h3_interior_frequencies_sum_to_one() {
    let g = HanoiGraph::build(3).unwrap();
    let r = empirical_degree_report(&g, &label("010"), 100_000, 99).unwrap();
    assert_eq!(freq_sum(&r), rat(1, 1));
    assert!(r.within(Z_BOUND), "{r:?}");
    let again = empirical_degree_report(&g, &label("010"), 100_000, 99).unwrap();
    assert_eq!(r, again);
}

/// Goodness of fit over all 135 trees of `H_2` at significance 1e-3.
#[test]
fn h2_tree_distribution_is_uniform() {
    let g = HanoiGraph::build(2).unwrap();
    let trees = enumerate_trees(&EdgeList::from(&g), 1000).unwrap();
    assert_eq!(trees.len() as u64, 135);
    let index: HashMap<Vec<(usize, usize)>, usize> = trees
        .into_iter()
        .enumerate()
        .map(|(i, mut t)| {
            t.sort_unstable();
            (t, i)
        })
        .collect();
    let n = 1_000_000u64;
    let mut counts = vec![0u64; 135];
    for k in 0..n {
        counts[index[&sample_tree(&g, split_seed(7, k))]] += 1;
    }
    let expected = n as f64 / 135.0;
    let chi2: f64 = counts
        .iter()
        .map(|&c| (c as f64 - expected).powi(2) / expected)
        .sum();
    let p = 1.0 - ChiSquared::new(134.0).unwrap().cdf(chi2);
    assert!(p > 1e-3, "chi2 = {chi2}, p = {p}");
    assert_eq!(count_recursive(2).unwrap().s, 135u32.into());
}
