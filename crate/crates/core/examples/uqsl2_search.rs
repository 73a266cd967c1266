//! Searches for generators of the degenerate algebra at α = -1/4 satisfying the quantum-group relations.
use quadralab::center::uqsl2_generator_search;
use quadralab::scalars::Gaussian;

fn main() -> quadralab::Result<()> {
    let report = uqsl2_generator_search(&Gaussian::from_ratio(-1, 4))?;
    println!("literal assignment relations: {:?}", report.literal_relations_hold);
    for s in &report.solutions {
        println!("{s:?}");
    }
    Ok(())
}
