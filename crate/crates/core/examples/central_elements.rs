//! Central elements: the pair on the Sklyanin locus, squares off it, and Z1, Z2 in the CHL family.
use quadralab::center::{chl_z1, chl_z2, components_central, sklyanin_central_pair, square_candidates};
use quadralab::presentations::chl_z_relations;
use quadralab::scalars::Gaussian;
use quadralab::symmetry::Q3Convention;

fn main() -> quadralab::Result<()> {
    let g = Gaussian::from_int;
    let (o0, o1) = sklyanin_central_pair(&g(2), &g(-3), &Gaussian::from_ratio(-1, 5))?;
    for c in [o0, o1].iter().chain(&square_candidates(&g(2), &g(3), &g(5))) {
        println!("{}: central = {}", c.render(), c.certify()?.central);
    }
    let (a, b, c, d) = (g(1), g(2), g(3), g(5));
    let z1 = chl_z1(&a, &b, &c, &d)?;
    println!("Z1 = {}: central = {}", z1.z_form.render(), z1.z_form.certify()?.central);
    let z2 = chl_z2(&a, &b, &c, &d, Q3Convention::SignCorrected)?;
    let central = components_central(&chl_z_relations(&a, &b, &c, &d)?, &z2.components())?;
    println!("psi(Z1)/2 = {}: central = {central}", z2.z2);
    Ok(())
}
