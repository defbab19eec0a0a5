//! Acceptance run: one PASS/FAIL line per criterion. Exits non-zero if any
//! criterion fails.

use std::time::{Duration, Instant};

use hanoi_trees::count::{count_closed, count_recursive, verify_identities};
use hanoi_trees::degree::{
    connecting_counts, full_distribution_table, outmost_dist, outmost_dist_recursive,
    printed_connecting_report, vertex_distribution, PrintedQuantity,
};
use hanoi_trees::entropy::{entropy, EntropyLevel};
use hanoi_trees::exact::{count_ratio, rat};
use hanoi_trees::oracle::{degree_poly, for_each_spanning_tree, matrix_tree_count, EdgeList};
use hanoi_trees::sampler::{empirical_degree_report, Z_BOUND};
use hanoi_trees::HanoiGraph;
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check, Duration);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn exact_counts() -> Check {
    for n in 1..=12 {
        let r = count_recursive(n).map_err(|e| e.to_string())?;
        let c = count_closed(n).map_err(|e| e.to_string())?;
        ensure(r == c, || {
            format!("recursion and closed form differ at n={n}")
        })?;
    }
    let s: Vec<BigUint> = (1..=3).map(|n| count_recursive(n).unwrap().s).collect();
    ensure(s == [3u32, 135, 20503125].map(BigUint::from), || {
        format!("s_1..s_3 = {s:?}")
    })?;
    Ok("recursive = closed for n=1..12; s = 3, 135, 20503125".into())
}

fn oracle_agreement() -> Check {
    for n in 1..=4 {
        let g = HanoiGraph::build(n).map_err(|e| e.to_string())?;
        let det = matrix_tree_count(&EdgeList::from(&g)).count;
        let s = count_recursive(n).unwrap().s;
        ensure(det == s, || format!("H_{n}: determinant {det} vs {s}"))?;
    }
    Ok("matrix-tree determinant = s_n for n=1..4".into())
}

fn identities() -> Check {
    let report = verify_identities(12).map_err(|e| e.to_string())?;
    if let Some(bad) = report.checks.iter().find(|c| !c.holds) {
        return Err(format!("{} fails at n={}", bad.identity, bad.n));
    }
    Ok(format!(
        "{} identity checks for n=1..12",
        report.checks.len()
    ))
}

fn entropy_limit() -> Check {
    let inf = entropy(EntropyLevel::Infinite);
    let direct = (3f64.ln() + 5f64.ln()) / 4.0;
    ensure((inf.to_f64() - direct).abs() < 1e-15, || {
        format!("limit {inf} vs {direct}")
    })?;
    let rounded = format!("{:.3}", inf.to_f64());
    ensure(rounded == "0.677", || format!("rounds to {rounded}"))?;
    let h10 = entropy(EntropyLevel::Finite(10)).to_f64();
    let gap = (h10 - inf.to_f64()).abs();
    ensure(gap < 1e-3, || format!("|h(10) - h(inf)| = {gap}"))?;
    Ok(format!(
        "h(inf) = {}..., |h(10) - h(inf)| = {gap:.2e}",
        &inf.decimal()[..14]
    ))
}

fn corner_distributions() -> Check {
    for n in 1..=10 {
        let closed = outmost_dist(n).map_err(|e| e.to_string())?;
        ensure(closed == outmost_dist_recursive(n), || {
            format!("normalised recursion differs at n={n}")
        })?;
    }
    let d = outmost_dist(2).unwrap();
    ensure(d.s0[1] == rat(32, 45) && d.s0[2] == rat(13, 45), || {
        format!("S_2(0) = {:?}", d.s0)
    })?;
    let g = HanoiGraph::build(2).unwrap();
    let v0 = g.vertex(&"0".parse().unwrap()).unwrap();
    let mut tally = [0u32; 4];
    let trees = for_each_spanning_tree(&EdgeList::from(&g), 1000, |t| {
        tally[t.iter().filter(|&&(a, b)| a == v0 || b == v0).count()] += 1;
    })
    .map_err(|e| e.to_string())?;
    ensure(trees == 135 && tally == [0, 96, 39, 0], || {
        format!("{trees} trees, tally {tally:?}")
    })?;
    Ok("closed = recursion for n=1..10; S_2(0) = (32/45, 13/45); tally (96, 39)".into())
}

fn connecting_ground_truth() -> Check {
    let g = HanoiGraph::build(2).unwrap();
    let v = g.vertex(&"01".parse().unwrap()).unwrap();
    let mut tally = [0u32; 4];
    for_each_spanning_tree(&EdgeList::from(&g), 1000, |t| {
        tally[t.iter().filter(|&&(a, b)| a == v || b == v).count()] += 1;
    })
    .map_err(|e| e.to_string())?;
    let c = connecting_counts(1).map_err(|e| e.to_string())?;
    let rec = c.s01.counts.clone();
    ensure(
        tally == [0, 27, 78, 30] && rec == [0u32, 27, 78, 30].map(BigUint::from),
        || format!("recursion {rec:?} vs enumeration {tally:?}"),
    )?;
    let report = printed_connecting_report(1).map_err(|e| e.to_string())?;
    let s01: Vec<_> = report
        .iter()
        .filter(|r| r.quantity == PrintedQuantity::S01)
        .collect();
    ensure(s01[0].matches && s01[0].printed == rat(1, 5), || {
        "printed degree-1 value does not match 1/5".into()
    })?;
    let warns: Vec<String> = s01
        .iter()
        .filter(|r| !r.matches)
        .map(|r| format!("i={} printed {} vs {}", r.degree, r.printed, r.derived))
        .collect();
    Ok(format!(
        "recursion = enumeration (27, 78, 30); printed i=1 matches 1/5; WARN {}",
        warns.join(", ")
    ))
}

fn matrix_recursion() -> Check {
    let mut checked = 0;
    for n in 3..=4 {
        let g = HanoiGraph::build(n).unwrap();
        let s = count_recursive(n).unwrap().s;
        let table = full_distribution_table(n).map_err(|e| e.to_string())?;
        ensure(table.len() == 3usize.pow(n), || "wrong vertex count".into())?;
        for d in &table {
            let probs = d.tree_probabilities();
            let total: BigRational = probs.iter().sum();
            ensure(total.is_one(), || {
                format!("{} in H_{n} sums to {total}", d.vertex)
            })?;
            let poly = degree_poly(&g, &d.vertex).map_err(|e| e.to_string())?;
            for (i, (p, c)) in probs.iter().zip(&poly.coeffs).enumerate() {
                ensure(*p == count_ratio(c, &s), || {
                    format!("{} in H_{n}, degree {i}", d.vertex)
                })?;
            }
            checked += 1;
        }
    }
    Ok(format!(
        "{checked} vertices of H_3 and H_4 match the weighted determinant"
    ))
}

fn handshake() -> Check {
    for n in 1..=4 {
        let total: BigRational = full_distribution_table(n)
            .map_err(|e| e.to_string())?
            .iter()
            .map(|d| d.expected_tree_degree())
            .sum();
        let want = rat(2 * (3i64.pow(n) - 1), 1);
        ensure(total == want, || format!("n={n}: {total} vs {want}"))?;
    }
    Ok("sum of expected degrees = 2(3^n - 1) for n=1..4".into())
}

fn sampler() -> Check {
    let g = HanoiGraph::build(3).unwrap();
    let v = "0".parse().unwrap();
    let r = empirical_degree_report(&g, &v, 100_000, 20_251_018).map_err(|e| e.to_string())?;
    let exact = vertex_distribution(3, &v).unwrap().tree_probabilities()[1].clone();
    let d1 = &r.degrees[0];
    ensure(d1.i == 1 && d1.exact_prob == exact, || {
        "wrong exact value".into()
    })?;
    let z = d1.z_score.ok_or("no z-score")?;
    ensure(z.abs() < Z_BOUND, || format!("z = {z:.3}"))?;
    Ok(format!(
        "P(deg(0) = 1): empirical {:.5}, exact {}, z = {z:.3}",
        d1.count as f64 / r.samples as f64,
        exact
    ))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("exact counts", exact_counts, Duration::from_secs(5)),
        (
            "oracle agreement",
            oracle_agreement,
            Duration::from_secs(60),
        ),
        ("identities", identities, Duration::from_secs(60)),
        ("entropy", entropy_limit, Duration::from_secs(60)),
        (
            "corner distributions",
            corner_distributions,
            Duration::from_secs(10),
        ),
        (
            "connecting vertices",
            connecting_ground_truth,
            Duration::from_secs(60),
        ),
        (
            "matrix recursion",
            matrix_recursion,
            Duration::from_secs(300),
        ),
        ("handshake", handshake, Duration::from_secs(60)),
        ("sampler", sampler, Duration::from_secs(30)),
    ];
    let mut failed = 0;
    for (k, (name, run, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if took > *budget => Err(format!("{detail}; over budget {budget:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail} ({took:.2?})", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {why} ({took:.2?})", k + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
