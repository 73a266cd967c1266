//! Free-algebra identities behind the central elements, and the CHL polynomial identities.
use quadralab::center::{chl_identity_checks, displayed_square_families, proof_identity_suite};

fn main() -> quadralab::Result<()> {
    for c in proof_identity_suite()?.iter().chain(&displayed_square_families()) {
        println!("{:<50} {}", c.name, c.holds);
    }
    let chl = chl_identity_checks()?;
    println!("CHL: first {}, second in ideal {}", chl.first_identity.holds, chl.second_identity_in_ideal);
    Ok(())
}
