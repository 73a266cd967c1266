mod common;

use common::{g, nonzero_gaussian, sklyanin_param};
use proptest::prelude::*;
use quadralab::freealg::FreeElement;
use quadralab::graded::{hilbert_function, Backend, DegreeCap, GradedAlgebra};
use quadralab::presentations::{sklyanin_relations, RelationSpace};
use quadralab::scalars::Gaussian;
use quadralab::Error;

const NAMES: [&str; 4] = ["x0", "x1", "x2", "x3"];

fn binom3(n: usize) -> usize {
    (n + 1) * (n + 2) * (n + 3) / 6
}

/// x_j x_i = q_ij x_i x_j for i < j.
fn skew_polynomial_ring(q: &[Gaussian; 6]) -> RelationSpace<Gaussian> {
    let x = FreeElement::<Gaussian>::gens();
    let mut elems = Vec::new();
    let mut t = 0;
    for i in 0..4 {
        for j in i + 1..4 {
            elems.push(x[j].mul(&x[i]).sub(&x[i].mul(&x[j]).scale(&q[t])));
            t += 1;
        }
    }
    RelationSpace::from_elements(&elems, "skew", NAMES).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn skew_polynomial_rings_have_polynomial_growth(q in proptest::array::uniform6(nonzero_gaussian())) {
        let h = hilbert_function(&skew_polynomial_ring(&q), 5, Backend::Exact, DegreeCap::default()).unwrap();
        prop_assert_eq!(h.dims, (0..=5).map(binom3).collect::<Vec<_>>());
    }

    #[test]
    fn modular_dimensions_bound_exact_ones(a in sklyanin_param(), b in sklyanin_param(), c in sklyanin_param()) {
        let rel = sklyanin_relations(&a, &b, &c);
        let exact = hilbert_function(&rel, 3, Backend::Exact, DegreeCap::default()).unwrap();
        let modular = hilbert_function(&rel, 3, Backend::Modular { p: 65537 }, DegreeCap::default()).unwrap();
        prop_assert!(modular.upper_bound_only && !exact.upper_bound_only);
        for (m, e) in modular.dims.iter().zip(&exact.dims) {
            prop_assert!(m >= e);
        }
    }
}

#[test]
fn sklyanin_locus_has_polynomial_growth() {
    // α + β + γ + αβγ = 0
    let rel = sklyanin_relations(&g(2), &g(-3), &Gaussian::from_ratio(-1, 5));
    let h = hilbert_function(&rel, 4, Backend::Exact, DegreeCap::default()).unwrap();
    assert_eq!(h.dims, vec![1, 4, 10, 20, 35]);
}

#[test]
fn off_locus_dimensions_drop() {
    let rel = sklyanin_relations(&g(2), &g(3), &g(5));
    let h = hilbert_function(&rel, 4, Backend::Exact, DegreeCap::default()).unwrap();
    assert_eq!(h.dims, vec![1, 4, 10, 16, 19]);
}

#[test]
fn degree_cap_is_enforced() {
    let rel = sklyanin_relations(&g(2), &g(3), &g(5));
    let err = hilbert_function(&rel, 8, Backend::Exact, DegreeCap(Some(7))).unwrap_err();
    assert!(matches!(err, Error::DegreeCapExceeded { requested: 8, cap: 7 }));
    assert!(DegreeCap::unlimited().check(1000).is_ok());
}

#[test]
fn relations_reduce_to_zero_and_generators_do_not() {
    let rel = sklyanin_relations(&g(2), &g(3), &g(5));
    let mut alg = GradedAlgebra::from_space(&rel, DegreeCap::default());
    for e in rel.elements() {
        assert!(alg.in_ideal(&e).unwrap());
        assert!(alg.normal_form(&e.mul(&FreeElement::gen(1))).unwrap().is_zero());
    }
    let x = FreeElement::<Gaussian>::gens();
    assert!(!alg.in_ideal(&x[0].mul(&x[1])).unwrap());
    assert!(!alg.is_central(&x[0]).unwrap().central);
}
