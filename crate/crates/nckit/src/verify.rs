//! The cross-module consistency suite behind `nckit verify`.
//!
//! Each check recomputes a structural fact two independent ways (fast path
//! against oracle, closed form against enumeration, transform against its
//! inverse) and reports one pass/fail line.  The whole suite is
//! deterministic: a fixed seed drives every random draw, and the final check
//! replays the others to confirm the report bytes do not move.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::assoc::{h_vector, h_vector_of, random_functional, realize};
use crate::bounds::Bounds;
use crate::brute;
use crate::chains::{dual_map, interval, maximal_chains};
use crate::complex::bk_complex;
use crate::error::Error;
use crate::freeprob::{
    classical_cumulants_via_series, cumulants_from_moments, moments_from_cumulants, Sequence,
};
use crate::parking;
use crate::partition::{catalan, enumerate, rank_vector, LatticeKind, Partition};
use crate::perm::{all_permutations, minimal_factorizations, partition_to_perm, Permutation};

/// Outcome of one check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn finish(id: usize, name: &'static str, failures: Vec<String>, ok_detail: String) -> CheckResult {
    CheckResult {
        id,
        name,
        passed: failures.is_empty(),
        detail: if failures.is_empty() {
            ok_detail
        } else {
            failures.join("; ")
        },
    }
}

fn check_counts_are_catalan() -> CheckResult {
    let bounds = Bounds::uniform(12);
    let mut failures = Vec::new();
    let mut counts = Vec::new();
    for n in 1..=12 {
        let got = match enumerate(n, LatticeKind::Noncrossing, &bounds) {
            Ok(v) => v.len() as u128,
            Err(e) => {
                failures.push(format!("n={n}: {e}"));
                continue;
            }
        };
        counts.push(got);
        if got != catalan(n) {
            failures.push(format!("n={n}: {got} != {}", catalan(n)));
        }
    }
    if catalan(12) != 208012 {
        failures.push(format!("closed form gives {} at n=12", catalan(12)));
    }
    finish(
        1,
        "noncrossing counts are Catalan through n=12",
        failures,
        format!("counts {counts:?}"),
    )
}

fn check_lattices_differ_by_one_element() -> CheckResult {
    let bounds = Bounds::default();
    let mut failures = Vec::new();
    let mut detail = String::new();
    match (
        enumerate(4, LatticeKind::Noncrossing, &bounds),
        enumerate(4, LatticeKind::Full, &bounds),
    ) {
        (Ok(nc), Ok(full)) => {
            let nc_set: BTreeSet<&Partition> = nc.iter().collect();
            let extra: Vec<&Partition> =
                full.iter().filter(|p| !nc_set.contains(p)).collect();
            let expected = Partition::from_blocks(4, &[vec![1, 3], vec![2, 4]]).unwrap();
            if full.len() != nc.len() + 1 {
                failures.push(format!("sizes {} vs {}", full.len(), nc.len()));
            }
            if extra.len() != 1 || *extra[0] != expected {
                failures.push(format!("extra elements {extra:?}"));
            } else {
                detail = format!(
                    "|full| = {}, |noncrossing| = {}, extra element {}",
                    full.len(),
                    nc.len(),
                    extra[0]
                );
            }
        }
        (r1, r2) => failures.push(format!("enumeration failed: {r1:?} {r2:?}")),
    }
    finish(
        2,
        "the n=4 lattices differ by the one crossing partition",
        failures,
        detail,
    )
}

fn check_lattice_laws_grading_duality() -> CheckResult {
    let bounds = Bounds::default();
    let mut failures = Vec::new();
    let mut pairs_checked = 0usize;

    for kind in [LatticeKind::Noncrossing, LatticeKind::Full] {
        for n in 1..=6 {
            let all = match enumerate(n, kind, &bounds) {
                Ok(v) => v,
                Err(e) => {
                    failures.push(format!("{kind:?} n={n}: {e}"));
                    continue;
                }
            };
            for p in &all {
                for q in &all {
                    pairs_checked += 1;
                    match (p.meet(q), p.join(q, kind)) {
                        (Ok(m), Ok(j)) => {
                            if brute::greatest_lower_bound(&all, p, q) != Some(m) {
                                failures.push(format!("meet of {p} and {q} is not the glb"));
                            }
                            if brute::least_upper_bound(&all, p, q) != Some(j) {
                                failures.push(format!("join of {p} and {q} is not the lub"));
                            }
                        }
                        (r1, r2) => {
                            failures.push(format!("meet/join failed on {p}, {q}: {r1:?} {r2:?}"))
                        }
                    }
                    if failures.len() > 4 {
                        return finish(3, "lattice laws, grading and duality", failures, String::new());
                    }
                }
            }
        }
    }

    for n in 1..=6 {
        match maximal_chains(n, &bounds) {
            Ok(chains) => {
                if !chains.iter().all(|c| c.labels().len() == n - 1) {
                    failures.push(format!("a maximal chain at n={n} has the wrong length"));
                }
                let expected = if n >= 2 {
                    (n as u128).pow(n as u32 - 2)
                } else {
                    1
                };
                if chains.len() as u128 != expected {
                    failures.push(format!("{} maximal chains at n={n}", chains.len()));
                }
            }
            Err(e) => failures.push(format!("chains n={n}: {e}")),
        }
    }

    let mut intervals_checked = 0usize;
    for n in 1..=5 {
        let all = enumerate(n, LatticeKind::Noncrossing, &bounds).unwrap();
        for p in &all {
            for q in &all {
                if !p.leq(q).unwrap() {
                    continue;
                }
                intervals_checked += 1;
                let members = match interval(&all, p, q) {
                    Ok(m) => m,
                    Err(e) => {
                        failures.push(format!("interval [{p}, {q}]: {e}"));
                        continue;
                    }
                };
                let mut images = Vec::new();
                for x in &members {
                    match dual_map(p, q, x) {
                        Ok(y) => {
                            if !(p.leq(&y).unwrap() && y.leq(q).unwrap()) {
                                failures.push(format!("dual of {x} leaves [{p}, {q}]"));
                            }
                            images.push(y);
                        }
                        Err(e) => failures.push(format!("dual of {x} in [{p}, {q}]: {e}")),
                    }
                }
                let distinct: BTreeSet<&Partition> = images.iter().collect();
                if distinct.len() != members.len() {
                    failures.push(format!("dual map is not injective on [{p}, {q}]"));
                }
                for (x, dx) in members.iter().zip(&images) {
                    for (y, dy) in members.iter().zip(&images) {
                        if x.leq(y).unwrap() && !dy.leq(dx).unwrap() {
                            failures.push(format!("dual map fails to reverse {x} <= {y}"));
                        }
                    }
                }
                if failures.len() > 4 {
                    return finish(3, "lattice laws, grading and duality", failures, String::new());
                }
            }
        }
    }

    finish(
        3,
        "lattice laws, grading and duality",
        failures,
        format!("{pairs_checked} meet/join pairs, {intervals_checked} intervals dualized"),
    )
}

fn check_absolute_order_isomorphism() -> CheckResult {
    let bounds = Bounds::uniform(7);
    let mut failures = Vec::new();
    let mut detail = String::new();
    for n in 1..=7 {
        let all = enumerate(n, LatticeKind::Noncrossing, &bounds).unwrap();
        let images: Vec<Permutation> = all.iter().map(partition_to_perm).collect();
        let long = Permutation::long_cycle(n);

        let image_set: BTreeSet<String> = images.iter().map(|w| w.to_string()).collect();
        if image_set.len() != all.len() {
            failures.push(format!("n={n}: the partition map is not injective"));
        }
        let below: Vec<Permutation> = all_permutations(n)
            .into_iter()
            .filter(|w| w.absolute_leq(&long).unwrap())
            .collect();
        if below.len() != image_set.len()
            || !below.iter().all(|w| image_set.contains(&w.to_string()))
        {
            failures.push(format!(
                "n={n}: image has {} elements, the order interval has {}",
                image_set.len(),
                below.len()
            ));
        }

        for (p, u) in all.iter().zip(&images) {
            for (q, w) in all.iter().zip(&images) {
                if p.leq(q).unwrap() != u.absolute_leq(w).unwrap() {
                    failures.push(format!("n={n}: order disagrees on {p} vs {q}"));
                }
            }
            if failures.len() > 4 {
                return finish(4, "refinement order is absolute order below the long cycle", failures, String::new());
            }
        }
        if n == 7 {
            detail = format!(
                "n=7: {} partitions matched against {} permutations below the long cycle",
                all.len(),
                below.len()
            );
        }
    }
    finish(
        4,
        "refinement order is absolute order below the long cycle",
        failures,
        detail,
    )
}

fn check_factorizations_and_label_products() -> CheckResult {
    let bounds = Bounds::default();
    let mut failures = Vec::new();

    let three_cycle = Permutation::from_cycle_string("(1,2,3)", 3).unwrap();
    let words: Vec<String> = minimal_factorizations(&three_cycle, &bounds)
        .unwrap()
        .iter()
        .map(|w| w.iter().map(|t| t.to_string()).collect::<String>())
        .collect();
    let expected = ["(1,2)(1,3)", "(1,3)(2,3)", "(2,3)(1,2)"];
    if words != expected {
        failures.push(format!("factorizations of the 3-cycle: {words:?}"));
    }

    let mut chains_checked = 0usize;
    for n in 1..=6 {
        let long = Permutation::long_cycle(n);
        match maximal_chains(n, &bounds) {
            Ok(chains) => {
                for chain in &chains {
                    if chain.label_product() != long {
                        failures.push(format!("n={n}: a chain's labels do not multiply out"));
                        break;
                    }
                }
                chains_checked += chains.len();
            }
            Err(e) => failures.push(format!("chains n={n}: {e}")),
        }
    }

    finish(
        5,
        "minimal factorizations and chain label products",
        failures,
        format!("3 factorizations; {chains_checked} chains multiply to the long cycle"),
    )
}

fn check_chain_labels_are_parking_functions() -> CheckResult {
    let bounds = Bounds::default();
    let mut failures = Vec::new();
    let mut counts = Vec::new();
    for n in 1..=5usize {
        let chains = match maximal_chains(n + 1, &bounds) {
            Ok(c) => c,
            Err(e) => {
                failures.push(format!("n={n}: {e}"));
                continue;
            }
        };
        let mut labels: Vec<Vec<usize>> = chains.iter().map(|c| c.stanley_labels()).collect();
        labels.sort_unstable();
        if labels.windows(2).any(|w| w[0] == w[1]) {
            failures.push(format!("n={n}: a label sequence repeats"));
        }
        let functions = parking::enumerate(n, &bounds).unwrap();
        if labels != functions {
            failures.push(format!(
                "n={n}: {} label sequences vs {} parking functions",
                labels.len(),
                functions.len()
            ));
        }
        counts.push(labels.len());
    }
    finish(
        6,
        "chain label sequences are exactly the parking functions",
        failures,
        format!("multiset equality at lengths 1..=5, counts {counts:?}"),
    )
}

fn check_parking_equivalence() -> CheckResult {
    let mut failures = Vec::new();
    let mut tried = 0usize;
    for n in 1..=6usize {
        for code in 0..(n as u64).pow(n as u32) {
            let mut c = code;
            let prefs: Vec<usize> = (0..n)
                .map(|_| {
                    let digit = (c % n as u64) as usize;
                    c /= n as u64;
                    digit + 1
                })
                .collect();
            tried += 1;
            if parking::parks_by_simulation(&prefs).unwrap()
                != parking::parks_by_sorted_rule(&prefs).unwrap()
            {
                failures.push(format!("{prefs:?}"));
                if failures.len() > 4 {
                    return finish(7, "parking simulation matches the sorted criterion", failures, String::new());
                }
            }
        }
    }
    finish(
        7,
        "parking simulation matches the sorted criterion",
        failures,
        format!("{tried} preference sequences"),
    )
}

fn check_quotient_complex() -> CheckResult {
    let bounds = Bounds::default();
    let mut failures = Vec::new();
    let mut counts_seen = Vec::new();
    for n in 2..=6usize {
        let complex = match bk_complex(n, &bounds) {
            Ok(c) => c,
            Err(e) => {
                failures.push(format!("n={n}: {e}"));
                continue;
            }
        };
        let counts = complex.cell_counts();
        if n == 3 && counts != [1, 4, 3] {
            failures.push(format!("n=3 counts {counts:?}"));
        }
        if n == 4 && counts != [1, 13, 28, 16] {
            failures.push(format!("n=4 counts {counts:?}"));
        }
        if counts != brute::anchored_chain_counts(n, &bounds) {
            failures.push(format!("n={n}: counts disagree with the chain-count oracle"));
        }
        if n <= 5 && counts != brute::label_class_counts(n, &bounds) {
            failures.push(format!("n={n}: counts disagree with the label-class oracle"));
        }
        if complex.euler_characteristic() != 0 {
            failures.push(format!(
                "n={n}: Euler characteristic {}",
                complex.euler_characteristic()
            ));
        }
        counts_seen.push((n, counts));
    }
    let detail = counts_seen
        .iter()
        .map(|(n, c)| format!("n={n}: {c:?}"))
        .collect::<Vec<_>>()
        .join("; ");
    finish(
        8,
        "quotient complex cell counts, oracles and Euler characteristic",
        failures,
        detail,
    )
}

fn check_h_vectors(seed: u64) -> CheckResult {
    let bounds = Bounds::default();
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    for (n, expected) in [(3usize, vec![1u64, 3, 1]), (4, vec![1, 6, 6, 1])] {
        match h_vector(n, &crate::assoc::default_functional(n), &bounds) {
            Ok(h) if h == expected => {}
            Ok(h) => failures.push(format!("n={n}: h-vector {h:?}")),
            Err(e) => failures.push(format!("n={n}: {e}")),
        }
    }

    let mut sweeps = 0usize;
    for n in 1..=8usize {
        let polytope = match realize(n, &bounds) {
            Ok(p) => p,
            Err(e) => {
                failures.push(format!("n={n}: {e}"));
                continue;
            }
        };
        let reference = match h_vector_of(&polytope, &crate::assoc::default_functional(n)) {
            Ok(h) => h,
            Err(e) => {
                failures.push(format!("n={n}: {e}"));
                continue;
            }
        };
        let ranks = rank_vector(n, LatticeKind::Noncrossing, &bounds).unwrap();
        if reference != ranks {
            failures.push(format!("n={n}: h-vector {reference:?} vs ranks {ranks:?}"));
        }
        let mut done = 0;
        let mut attempts = 0;
        while done < 100 && attempts < 1000 {
            attempts += 1;
            let functional = random_functional(n, &mut rng);
            match h_vector_of(&polytope, &functional) {
                Ok(h) => {
                    done += 1;
                    sweeps += 1;
                    if h != reference {
                        failures.push(format!("n={n}: a generic functional gave {h:?}"));
                        break;
                    }
                }
                Err(Error::LevelEdge { .. }) => continue,
                Err(e) => {
                    failures.push(format!("n={n}: {e}"));
                    break;
                }
            }
        }
        if done < 100 {
            failures.push(format!("n={n}: only {done} generic functionals found"));
        }
    }

    finish(
        9,
        "polytope h-vectors equal lattice rank vectors",
        failures,
        format!("{sweeps} random generic functionals agreed"),
    )
}

fn random_sequence(order: usize, rng: &mut ChaCha8Rng) -> Sequence {
    Sequence::new(
        (0..order)
            .map(|_| {
                BigRational::new(
                    rng.random_range(-99i64..=99).into(),
                    rng.random_range(1i64..=20).into(),
                )
            })
            .collect(),
    )
}

fn check_moment_cumulant_transforms(seed: u64) -> CheckResult {
    let bounds = Bounds::default();
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut round_trips = 0usize;
    for _ in 0..50 {
        let order = rng.random_range(1..=8);
        let seq = random_sequence(order, &mut rng);
        for kind in [LatticeKind::Noncrossing, LatticeKind::Full] {
            let m = moments_from_cumulants(&seq, kind, &bounds).unwrap();
            if cumulants_from_moments(&m, kind, &bounds).unwrap() != seq {
                failures.push(format!("{kind:?} round trip failed at order {order}"));
            }
            let k = cumulants_from_moments(&seq, kind, &bounds).unwrap();
            if moments_from_cumulants(&k, kind, &bounds).unwrap() != seq {
                failures.push(format!("{kind:?} reverse round trip failed at order {order}"));
            }
            round_trips += 2;
        }
        if cumulants_from_moments(&seq, LatticeKind::Full, &bounds).unwrap()
            != classical_cumulants_via_series(&seq).unwrap()
        {
            failures.push("partition sum disagrees with the series logarithm".into());
        }
        if failures.len() > 4 {
            return finish(10, "moment/cumulant transforms invert and match the series route", failures, String::new());
        }
    }

    let variance = Sequence::from_integers(&[0, 1, 0, 0, 0, 0, 0, 0]);
    match moments_from_cumulants(&variance, LatticeKind::Noncrossing, &bounds) {
        Ok(m) if m == Sequence::from_integers(&[0, 1, 0, 2, 0, 5, 0, 14]) => {}
        other => failures.push(format!("semicircle moments: {other:?}")),
    }
    let variance6 = Sequence::from_integers(&[0, 1, 0, 0, 0, 0]);
    match moments_from_cumulants(&variance6, LatticeKind::Full, &bounds) {
        Ok(m) if m == Sequence::from_integers(&[0, 1, 0, 3, 0, 15]) => {}
        other => failures.push(format!("Gaussian moments: {other:?}")),
    }

    finish(
        10,
        "moment/cumulant transforms invert and match the series route",
        failures,
        format!("{round_trips} round trips; semicircle and Gaussian moments exact"),
    )
}

/// Checks 1 through 10, in order.
pub fn run_core(seed: u64) -> Vec<CheckResult> {
    vec![
        check_counts_are_catalan(),
        check_lattices_differ_by_one_element(),
        check_lattice_laws_grading_duality(),
        check_absolute_order_isomorphism(),
        check_factorizations_and_label_products(),
        check_chain_labels_are_parking_functions(),
        check_parking_equivalence(),
        check_quotient_complex(),
        check_h_vectors(seed),
        check_moment_cumulant_transforms(seed),
    ]
}

/// The full suite: the core checks plus a determinism check that reruns the
/// core and compares the rendered reports byte for byte.
pub fn run_all(seed: u64) -> Vec<CheckResult> {
    let mut results = run_core(seed);
    let again = run_core(seed);
    let identical = report(&results) == report(&again);
    results.push(CheckResult {
        id: 11,
        name: "repeated runs render byte-identical reports",
        passed: identical,
        detail: if identical {
            "two runs, equal bytes".into()
        } else {
            "reports differ between runs".into()
        },
    });
    results
}

pub fn all_passed(results: &[CheckResult]) -> bool {
    results.iter().all(|r| r.passed)
}

/// Fixed-format report, one line per check plus a summary line.
pub fn report(results: &[CheckResult]) -> String {
    let mut out = String::new();
    for r in results {
        let _ = writeln!(
            out,
            "[{}] {:2}  {} ({})",
            if r.passed { "pass" } else { "FAIL" },
            r.id,
            r.name,
            r.detail
        );
    }
    let passed = results.iter().filter(|r| r.passed).count();
    let _ = writeln!(out, "{passed}/{} checks passed", results.len());
    out
}
