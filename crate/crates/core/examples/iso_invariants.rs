//! Angle invariants of A(2,3,5) for all orderings of the generators.
use quadralab::presentations::{angle_invariant, isomorphism_substitutions, permutations4, sklyanin_relations};
use quadralab::scalars::Gaussian;

fn main() -> quadralab::Result<()> {
    let [a, b, c] = [2, 3, 5].map(Gaussian::from_int);
    let rel = sklyanin_relations(&a, &b, &c);
    for perm in permutations4() {
        match angle_invariant(&rel, perm) {
            Ok(l) => println!("{perm:?}: ({}, {}, {})", l[0], l[1], l[2]),
            Err(e) => println!("{perm:?}: {e}"),
        }
    }
    println!("substitutions realize the isomorphisms: {:?}", isomorphism_substitutions(&a, &b, &c)?);
    Ok(())
}
