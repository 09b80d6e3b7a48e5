//! One test per acceptance criterion, each printing its pass/fail line.
//! The underlying suite runs once and is shared across the tests.

use std::sync::OnceLock;

use nckit::verify::{report, run_all, CheckResult};

fn results() -> &'static [CheckResult] {
    static RESULTS: OnceLock<Vec<CheckResult>> = OnceLock::new();
    RESULTS.get_or_init(|| {
        let results = run_all(0);
        print!("{}", report(&results));
        results
    })
}

fn criterion(id: usize) {
    let r = results()
        .iter()
        .find(|r| r.id == id)
        .expect("criterion present");
    println!(
        "criterion {:2} [{}] {} ({})",
        r.id,
        if r.passed { "pass" } else { "FAIL" },
        r.name,
        r.detail
    );
    assert!(r.passed, "{}: {}", r.name, r.detail);
}

#[test]
fn criterion_01_noncrossing_counts_are_catalan() {
    criterion(1);
}

#[test]
fn criterion_02_lattices_differ_by_one_crossing_partition() {
    criterion(2);
}

#[test]
fn criterion_03_lattice_laws_grading_and_duality() {
    criterion(3);
}

#[test]
fn criterion_04_refinement_order_is_absolute_order() {
    criterion(4);
}

#[test]
fn criterion_05_factorizations_and_label_products() {
    criterion(5);
}

#[test]
fn criterion_06_chain_labels_are_parking_functions() {
    criterion(6);
}

#[test]
fn criterion_07_parking_simulation_matches_sorted_rule() {
    criterion(7);
}

#[test]
fn criterion_08_quotient_complex_counts_and_euler() {
    criterion(8);
}

#[test]
fn criterion_09_h_vectors_equal_rank_vectors() {
    criterion(9);
}

#[test]
fn criterion_10_moment_cumulant_transforms() {
    criterion(10);
}

#[test]
fn criterion_11_reports_are_byte_identical() {
    criterion(11);
}
