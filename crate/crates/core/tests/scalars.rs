mod common;

use common::{g, gaussian, nonzero_gaussian};
use proptest::prelude::*;
use quadralab::scalars::{parse_scalar, var_names, Field, Gaussian, PrimeField, RationalFunction, Scalar};
use quadralab::Error;

proptest! {
    #[test]
    fn gaussian_ring_axioms(a in gaussian(), b in gaussian(), c in gaussian()) {
        prop_assert_eq!(a.clone() * &(b.clone() + &c), a.clone() * &b + &(a.clone() * &c));
        prop_assert_eq!(a.clone() * &b, b.clone() * &a);
        prop_assert_eq!((a.clone() * &b) * &c, a.clone() * &(b * &c));
        prop_assert!((a.clone() - &a).is_zero());
    }

    #[test]
    fn gaussian_inverse(a in nonzero_gaussian()) {
        prop_assert!((a.clone() * &a.inv().unwrap()).is_one());
    }

    #[test]
    fn norm_is_multiplicative(a in gaussian(), b in gaussian()) {
        prop_assert_eq!((a.clone() * &b).norm(), a.norm() * b.norm());
        prop_assert!((a.clone() * &a.conj()).is_real());
    }

    #[test]
    fn display_parses_back(a in gaussian()) {
        prop_assert_eq!(parse_scalar(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn reduction_mod_p_is_a_ring_map(a in gaussian(), b in gaussian()) {
        let f = PrimeField::new(65537).unwrap();
        let (ra, rb) = (f.reduce(&a).unwrap(), f.reduce(&b).unwrap());
        prop_assert_eq!(f.reduce(&(a.clone() * &b)).unwrap(), ra * rb);
        prop_assert_eq!(f.reduce(&(a + &b)).unwrap(), ra + rb);
    }
}

#[test]
fn i_squared_is_minus_one() {
    assert_eq!(Gaussian::i() * &Gaussian::i(), -g(1));
    let f = PrimeField::new(13).unwrap();
    let s = f.element(f.sqrt_minus_one());
    assert_eq!(s * s, -f.element(1));
}

#[test]
fn invalid_primes_are_rejected() {
    for p in [2, 7, 15, 65535] {
        assert!(matches!(PrimeField::new(p), Err(Error::InvalidPrime(_))), "p = {p}");
    }
}

#[test]
fn parse_accepts_common_forms() {
    assert_eq!(parse_scalar("-3/4").unwrap(), Gaussian::from_ratio(-3, 4));
    assert_eq!(parse_scalar("2-i").unwrap(), g(2) - &Gaussian::i());
    assert!(parse_scalar("1/0").is_err());
    assert!(parse_scalar("abc").is_err());
}

#[test]
fn rational_functions_cancel() {
    let v = RationalFunction::vars(&var_names(&["x", "y"]));
    let (x, y) = (&v[0], &v[1]);
    let q = (x.clone() * x - &(y.clone() * y)).div(&(x.clone() - y)).unwrap();
    assert_eq!(q, x.clone() + y);
    assert!(q.is_polynomial());
    assert!(x.clone().div(&RationalFunction::zero()).is_err());
}
