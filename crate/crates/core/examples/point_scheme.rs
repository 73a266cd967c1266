//! The 20 points of the point scheme of A(4,9,25) and the check that they cut out the relations.
use quadralab::geometry::{point_table, theta, verify_gamma};
use quadralab::scalars::Gaussian;

fn main() -> quadralab::Result<()> {
    let roots = [2, 3, 5].map(Gaussian::from_int);
    let table = point_table(&roots[0], &roots[1], &roots[2])?;
    for (stratum, p) in table.points() {
        println!("{:>4}  {:?} -> {:?}", stratum.label(), p.to_strings(), theta(&table, p)?.to_strings());
    }
    let params = roots.clone().map(|r| r.clone() * &r);
    println!("all checks pass: {}", verify_gamma(&params, &roots)?.all_pass());
    Ok(())
}
