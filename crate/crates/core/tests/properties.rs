use hanoi_trees::count::{count_closed, count_recursive};
use hanoi_trees::degree::{permute_table, transfer_matrix, DegreeContext};
use hanoi_trees::graph::HanoiGraph;
use hanoi_trees::label::{compress_label, PegPermutation, VertexLabel};
use num_traits::One;
use proptest::prelude::*;

fn raw_label(max_len: usize) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0u8..3, 1..=max_len)
}

fn perm() -> impl Strategy<Value = PegPermutation> {
    (0usize..6).prop_map(|i| PegPermutation::all()[i])
}

fn text(d: &[u8]) -> String {
    d.iter().map(|x| char::from(b'0' + x)).collect()
}

proptest! {
    #[test]
    fn compression_is_idempotent(raw in raw_label(16)) {
        let once = compress_label(&text(&raw)).unwrap();
        let twice = compress_label(&once.to_string()).unwrap();
        prop_assert_eq!(&once, &twice);
        prop_assert_eq!(once, VertexLabel::from_raw_digits(raw));
    }

    #[test]
    fn peg_permutations_are_automorphisms(n in 1u32..=5, sigma in perm()) {
        let g = HanoiGraph::build(n).unwrap();
        let mut moved = g.permuted_label_edges(sigma);
        moved.sort();
        let mut original: Vec<(VertexLabel, VertexLabel)> = g
            .sorted_label_edges()
            .into_iter()
            .map(|(a, b)| (a.clone(), b.clone()))
            .collect();
        original.sort();
        prop_assert_eq!(moved, original);
    }

    #[test]
    fn tables_follow_peg_symmetry(n in 2u32..=9, raw in raw_label(9), sigma in perm()) {
        prop_assume!(raw.len() <= n as usize);
        let ctx = DegreeContext::new(n).unwrap();
        let v = VertexLabel::from_raw_digits(raw);
        let here = ctx.table(&v).unwrap();
        let there = ctx.table(&v.permuted(sigma)).unwrap();
        prop_assert_eq!(permute_table(&here, sigma), there);
    }

    #[test]
    fn tables_are_normalised(n in 1u32..=12, raw in raw_label(12)) {
        prop_assume!(raw.len() <= n as usize);
        let ctx = DegreeContext::new(n).unwrap();
        let d = ctx.distribution(&VertexLabel::from_raw_digits(raw)).unwrap();
        prop_assert!(d.is_normalised());
        // No vertex is isolated in a spanning tree.
        prop_assert!(d.table[0][0] == num_rational::BigRational::default());
    }
}

#[test]
fn recursion_equals_closed_form() {
    for n in 1..=12 {
        assert_eq!(
            count_recursive(n).unwrap(),
            count_closed(n).unwrap(),
            "level {n}"
        );
    }
}

#[test]
fn transfer_columns_sum_to_one() {
    for n in 1..=20 {
        for s in transfer_matrix(n).column_sums() {
            assert!(s.is_one());
        }
    }
}
