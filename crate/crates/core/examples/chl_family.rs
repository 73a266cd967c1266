//! Classification of points of the CHL family and the matching Sklyanin parameters.
use quadralab::presentations::{chl_to_sklyanin_params, classify_chl, excluded_points};
use quadralab::scalars::{parse_scalar, Gaussian};

fn main() -> quadralab::Result<()> {
    for text in ["1,2,-4,2", "1,1,1,1", "-i,1,-i,1"] {
        let v: Vec<Gaussian> = text.split(',').map(parse_scalar).collect::<quadralab::Result<_>>()?;
        let p: [Gaussian; 4] = v.try_into().expect("four coordinates");
        println!("({text}): {:?}", classify_chl(&p)?);
    }
    let data = chl_to_sklyanin_params(&Gaussian::from_int(1), &Gaussian::from_int(2), &Gaussian::from_int(-4), &Gaussian::from_int(2))?;
    println!("(1,2,-4,2) -> A({}, {}, {})", data.alpha, data.beta, data.gamma);
    for (line, p) in excluded_points() {
        println!("excluded on {line:?}: {p:?}");
    }
    Ok(())
}
