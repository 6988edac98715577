//! Desk acceptance suite: one test per criterion, each printing a single
//! pass/fail line. Run with `cargo test -p kschur --test acceptance -- --nocapture`.

use kschur::suite::{run_criterion, DEFAULT_SEED};

fn criterion(id: u32) {
    let report = run_criterion(id, DEFAULT_SEED).expect("criterion runs without error");
    println!("{}", report.summary());
    assert!(report.pass, "{}", report.summary());
}

#[test]
fn criterion_1_single_variable_closed_form() {
    criterion(1);
}

#[test]
fn criterion_2_pieri_rules() {
    criterion(2);
}

#[test]
fn criterion_3_structural_identities() {
    criterion(3);
}

#[test]
fn criterion_4_theta() {
    criterion(4);
}

#[test]
fn criterion_5_specialization_series() {
    criterion(5);
}

#[test]
fn criterion_6_evaluations_at_minus_one() {
    criterion(6);
}

#[test]
fn criterion_7_harmonic_functions() {
    criterion(7);
}

#[test]
fn criterion_8_classical_regressions() {
    criterion(8);
}
