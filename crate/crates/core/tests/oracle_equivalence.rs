use hanoi_trees::count::count_recursive;
use hanoi_trees::degree::{full_distribution_table, DegreeContext, SubgraphClass};
use hanoi_trees::exact::count_ratio;
use hanoi_trees::oracle::{
    bareiss_determinant, degree_poly, for_each_spanning_tree, forest_class_degree_polys,
    laplacian_minor, matrix_tree_count, EdgeList,
};
use hanoi_trees::HanoiGraph;
use num_bigint::BigUint;

#[test]
fn determinant_matches_tree_count() {
    for n in 1..=4 {
        let g = HanoiGraph::build(n).unwrap();
        let c = matrix_tree_count(&EdgeList::from(&g));
        assert!(c.connected);
        assert_eq!(c.count, count_recursive(n).unwrap().s, "H_{n}");
    }
}

#[test]
fn any_minor_gives_the_same_count() {
    for n in 2..=3 {
        let g = HanoiGraph::build(n).unwrap();
        let e = EdgeList::from(&g);
        let s = count_recursive(n).unwrap().s;
        for v in 0..g.vertex_count() {
            let d = bareiss_determinant(laplacian_minor(&e, |_, _| 1, &[v]));
            assert_eq!(d, s.clone().into(), "deleting vertex {v} of H_{n}");
        }
    }
}

#[test]
fn enumeration_of_h2() {
    let g = HanoiGraph::build(2).unwrap();
    let e = EdgeList::from(&g);
    let v01 = g.vertex(&"01".parse().unwrap()).unwrap();
    let v0 = g.vertex(&"0".parse().unwrap()).unwrap();
    let mut tally01 = [0u32; 4];
    let mut tally0 = [0u32; 4];
    let emitted = for_each_spanning_tree(&e, 1000, |t| {
        let deg = |v: usize| t.iter().filter(|&&(a, b)| a == v || b == v).count();
        tally01[deg(v01)] += 1;
        tally0[deg(v0)] += 1;
    })
    .unwrap();
    assert_eq!(emitted, 135);
    assert_eq!(tally01, [0, 27, 78, 30]);
    assert_eq!(tally0, [0, 96, 39, 0]);
}

#[test]
fn enumeration_count_matches_determinant_on_h1_h2() {
    for n in 1..=2 {
        let e = EdgeList::from(&HanoiGraph::build(n).unwrap());
        let mut k = 0u64;
        for_each_spanning_tree(&e, 1000, |_| k += 1).unwrap();
        assert_eq!(BigUint::from(k), matrix_tree_count(&e).count);
    }
}

#[test]
fn degree_polys_sum_to_tree_count() {
    for n in 2..=3 {
        let g = HanoiGraph::build(n).unwrap();
        let s = count_recursive(n).unwrap().s;
        for label in g.labels() {
            let p = degree_poly(&g, label).unwrap();
            assert_eq!(p.total(), s, "{label} in H_{n}");
            assert_eq!(p.coeffs[0], BigUint::default());
        }
    }
}

/// Every class column of every vertex table agrees with the weighted
/// determinant oracle, not just the spanning-tree column.
#[test]
fn all_class_tables_match_forest_oracle() {
    for n in 2..=3 {
        let g = HanoiGraph::build(n).unwrap();
        let sizes = count_recursive(n).unwrap();
        let totals = [&sizes.s, &sizes.p, &sizes.t, &sizes.r, &sizes.l];
        for dist in full_distribution_table(n).unwrap() {
            let polys = forest_class_degree_polys(&g, &dist.vertex).unwrap();
            for class in SubgraphClass::ALL {
                let c = class.index();
                for (i, (row, coeff)) in dist.table.iter().zip(&polys[c]).enumerate() {
                    assert_eq!(
                        row[c],
                        count_ratio(coeff, totals[c]),
                        "{} in H_{n}, class {class}, degree {i}",
                        dist.vertex
                    );
                }
            }
        }
    }
}

#[test]
fn spanning_tree_column_matches_oracle_on_h4() {
    let g = HanoiGraph::build(4).unwrap();
    let ctx = DegreeContext::new(4).unwrap();
    let s = count_recursive(4).unwrap().s;
    // One vertex per class of label shape keeps this quick; the acceptance
    // target covers all 81.
    for label in ["0", "01", "010", "0120", "2101", "1202"] {
        let label = label.parse().unwrap();
        let p = degree_poly(&g, &label).unwrap();
        let d = ctx.distribution(&label).unwrap();
        for i in 0..4 {
            assert_eq!(d.tree_probabilities()[i], count_ratio(&p.coeffs[i], &s));
        }
    }
}
