#![allow(dead_code)]

use proptest::prelude::*;
use quadralab::scalars::{rat, Gaussian, Scalar};

pub fn gaussian() -> impl Strategy<Value = Gaussian> {
    (-6i64..=6, -6i64..=6, 1i64..=4).prop_map(|(a, b, d)| Gaussian::new(rat(a, d), rat(b, d)))
}

pub fn nonzero_gaussian() -> impl Strategy<Value = Gaussian> {
    gaussian().prop_filter("nonzero", |g| !g.is_zero())
}

/// Gaussian integers away from 0 and ±1, usable as Sklyanin parameters.
pub fn sklyanin_param() -> impl Strategy<Value = Gaussian> {
    (-5i64..=5, -3i64..=3)
        .prop_map(|(a, b)| Gaussian::from_int(a) + &(Gaussian::i() * &Gaussian::from_int(b)))
        .prop_filter("not 0, 1, -1", |g| !g.is_zero() && !g.is_one() && !(-g.clone()).is_one())
}

pub fn g(n: i64) -> Gaussian {
    Gaussian::from_int(n)
}
