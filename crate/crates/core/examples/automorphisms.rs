//! Heisenberg automorphisms for roots (2,3,5) and the ψ of the CHL family.
use quadralab::scalars::Gaussian;
use quadralab::symmetry::{chl_psi_report, gamma, heisenberg_checks, point_symmetries, psi, Q3Convention};

fn main() -> quadralab::Result<()> {
    let roots = [2, 3, 5].map(Gaussian::from_int);
    println!("{:?}", heisenberg_checks(&roots)?);
    println!("psi1^2 / gamma1 = {:?}", psi(1, &roots)?.pow(2).ratio_to(&gamma(1)));
    println!("{:?}", point_symmetries(&roots)?);
    let [a, b, c, d] = [1, 2, 3, 5].map(Gaussian::from_int);
    for conv in [Q3Convention::AsPrinted, Q3Convention::SignCorrected] {
        println!("{conv:?}: {:?}", chl_psi_report(&a, &b, &c, &d, conv)?);
    }
    Ok(())
}
