//! Hilbert functions on and off the Sklyanin locus.
use quadralab::graded::{hilbert_function, Backend, DegreeCap};
use quadralab::presentations::sklyanin_relations;
use quadralab::scalars::Gaussian;

fn main() -> quadralab::Result<()> {
    let cap = DegreeCap::default();
    let on = sklyanin_relations(&Gaussian::from_int(2), &Gaussian::from_int(-3), &Gaussian::from_ratio(-1, 5));
    println!("A(2,-3,-1/5): {:?}", hilbert_function(&on, 4, Backend::Exact, cap)?.dims);
    let off = sklyanin_relations(&Gaussian::from_int(2), &Gaussian::from_int(3), &Gaussian::from_int(5));
    let h = hilbert_function(&off, 7, Backend::Modular { p: 65537 }, cap)?;
    println!("A(2,3,5) ({}): {:?}", h.backend, h.dims);
    Ok(())
}
