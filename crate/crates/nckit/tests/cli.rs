//! End-to-end runs of the compiled binary.

use std::process::{Command, Output};

fn nckit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nckit"))
        .args(args)
        .env_remove("NCKIT_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn lattice_dot_has_fourteen_vertices() {
    let out = nckit(&["lattice", "--n", "4", "--kind", "nc", "--format", "dot"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let vertices = text
        .lines()
        .filter(|l| l.starts_with("  \"") && !l.contains("->"))
        .count();
    assert_eq!(vertices, 14);
    assert!(text.starts_with("digraph lattice {"));
}

#[test]
fn lattice_table_lists_five_noncrossing_partitions() {
    let out = nckit(&["lattice", "--n", "3"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "{1,2,3}\n{1,2}{3}\n{1,3}{2}\n{1}{2,3}\n{1}{2}{3}\n"
    );
}

#[test]
fn rank_vectors_render_in_parens() {
    let out = nckit(&["lattice", "--n", "4", "--ranks"]);
    assert_eq!(stdout(&out), "(1,6,6,1)\n");
    let out = nckit(&["lattice", "--n", "4", "--kind", "pi", "--ranks"]);
    assert_eq!(stdout(&out), "(1,6,7,1)\n");
}

#[test]
fn parking_check_reports_the_assignment() {
    let out = nckit(&["parking", "--check", "2,1,1", "--format", "json"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "{\"assignment\":[2,1,3],\"parks\":true}\n"
    );
    let out = nckit(&["parking", "--check", "2,2", "--format", "json"]);
    assert_eq!(stdout(&out), "{\"assignment\":null,\"parks\":false}\n");
}

#[test]
fn parking_enumerate_is_lexicographic() {
    let out = nckit(&["parking", "--enumerate", "2"]);
    assert_eq!(stdout(&out), "1,1\n1,2\n2,1\n");
}

#[test]
fn chains_show_both_label_styles() {
    let out = nckit(&["chains", "--n", "3", "--labels", "stanley"]);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 3);
    assert!(text.contains(" : 1 1\n") || text.contains(" : 1 2\n"));
    let out = nckit(&["chains", "--n", "3", "--format", "csv"]);
    assert!(stdout(&out).starts_with("element0,element1,element2,label1,label2,stanley1,stanley2"));
}

#[test]
fn complex_table_shows_counts_and_euler_characteristic() {
    let out = nckit(&["complex", "--n", "4", "--bk"]);
    assert_eq!(
        stdout(&out),
        "cells by dimension: [1, 13, 28, 16]\nEuler characteristic: 0\n"
    );
    let out = nckit(&["complex", "--n", "3", "--order"]);
    assert_eq!(
        stdout(&out),
        "cells by dimension: [5, 7, 3]\nEuler characteristic: 1\n"
    );
}

#[test]
fn hvector_matches_the_pentagon() {
    let out = nckit(&["assoc", "--n", "3", "--hvector"]);
    assert_eq!(stdout(&out), "(1,3,1)\n");
    // Any explicit generic functional gives the same answer.
    let out = nckit(&["assoc", "--n", "3", "--hvector", "--functional", "1,101,10201"]);
    assert_eq!(stdout(&out), "(1,3,1)\n");
}

#[test]
fn freeprob_moments_of_the_semicircle() {
    let out = nckit(&[
        "freeprob", "moments", "--cumulants", "0,1,0,0,0,0,0,0", "--kind", "nc",
    ]);
    assert_eq!(stdout(&out), "0,1,0,2,0,5,0,14\n");
    let out = nckit(&[
        "freeprob", "cumulants", "--moments", "0,1,0,3,0,15", "--kind", "pi", "--format", "json",
    ]);
    assert_eq!(
        stdout(&out),
        "{\"cumulants\":[\"0\",\"1\",\"0\",\"0\",\"0\",\"0\"],\"kind\":\"pi\"}\n"
    );
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["lattice"][..],
        &["no-such-command"][..],
        &["parking"][..],
        &["parking", "--check", "1,x"][..],
        &["complex", "--n", "3"][..],
        &["assoc", "--n", "3"][..],
        &["lattice", "--n", "4", "--ranks", "--format", "dot"][..],
        &["freeprob", "moments", "--cumulants", "1/0"][..],
    ] {
        let out = nckit(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
    let out = nckit(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn bounds_respect_the_environment_override() {
    let out = nckit(&["lattice", "--n", "13"]);
    assert_eq!(out.status.code(), Some(2));

    let out = Command::new(env!("CARGO_BIN_EXE_nckit"))
        .args(["lattice", "--n", "4", "--ranks"])
        .env("NCKIT_MAX_N", "4")
        .output()
        .expect("binary runs");
    assert!(out.status.success());

    let out = Command::new(env!("CARGO_BIN_EXE_nckit"))
        .args(["lattice", "--n", "5"])
        .env("NCKIT_MAX_N", "4")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2));

    let out = Command::new(env!("CARGO_BIN_EXE_nckit"))
        .args(["lattice", "--n", "2"])
        .env("NCKIT_MAX_N", "zero")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn identical_invocations_are_byte_identical() {
    let a = nckit(&["assoc", "--n", "4", "--realize", "--format", "csv"]);
    let b = nckit(&["assoc", "--n", "4", "--realize", "--format", "csv"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let a = nckit(&["assoc", "--n", "4", "--hvector", "--seed", "7"]);
    let b = nckit(&["assoc", "--n", "4", "--hvector", "--seed", "7"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a), "(1,6,6,1)\n");
}
