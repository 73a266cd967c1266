//! Acceptance criteria A1–A11: one test per criterion, each printing a
//! PASS/FAIL line followed by its individual checks.

use quadralab::selftest::{self, run_criterion, CriterionFn};

fn criterion(id: &'static str, f: CriterionFn) {
    let r = run_criterion(id, f);
    let mut out = r.line();
    for d in &r.details {
        out.push_str("\n    ");
        out.push_str(d);
    }
    println!("{out}");
    assert!(r.pass, "{id} failed");
}

#[test]
fn a01_hilbert_sklyanin() {
    criterion("A1", selftest::a1_hilbert_sklyanin);
}

#[test]
fn a02_hilbert_generic() {
    criterion("A2", selftest::a2_hilbert_generic);
}

#[test]
fn a03_point_scheme() {
    criterion("A3", selftest::a3_point_scheme);
}

#[test]
fn a04_minor_factorizations() {
    criterion("A4", selftest::a4_minor_factorizations);
}

#[test]
fn a05_centrality() {
    criterion("A5", selftest::a5_centrality);
}

#[test]
fn a06_identities() {
    criterion("A6", selftest::a6_identities);
}

#[test]
fn a07_automorphisms() {
    criterion("A7", selftest::a7_automorphisms);
}

#[test]
fn a08_isomorphism_invariants() {
    criterion("A8", selftest::a8_isomorphism_invariants);
}

#[test]
fn a09_chl_correspondence() {
    criterion("A9", selftest::a9_chl_correspondence);
}

#[test]
fn a10_elliptic() {
    criterion("A10", selftest::a10_elliptic);
}

#[test]
fn a11_commutative_quotient() {
    criterion("A11", selftest::a11_commutative_quotient);
}
