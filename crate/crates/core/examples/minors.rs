//! Symbolic factorizations of the maximal minors.
use quadralab::geometry::{quadric_det, verify_minor_factorizations, ParamPolys};

fn main() {
    let p = ParamPolys::symbolic();
    let (h, g) = verify_minor_factorizations(&p);
    for c in h.iter().chain(&g) {
        println!("{c:?}");
    }
    println!("det of the quadric matrix: {}", quadric_det(&p));
}
