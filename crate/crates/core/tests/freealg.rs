mod common;

use common::{g, gaussian};
use proptest::prelude::*;
use quadralab::freealg::{FreeElement, Word};
use quadralab::linalg::mat_mul;
use quadralab::scalars::Gaussian;

fn matrix() -> impl Strategy<Value = Vec<Vec<Gaussian>>> {
    proptest::collection::vec(proptest::collection::vec(gaussian(), 4), 4)
}

fn quadratic() -> impl Strategy<Value = FreeElement<Gaussian>> {
    proptest::collection::vec(gaussian(), 16).prop_map(|v| FreeElement::from_coefficient_vector(&v, 2))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn apply_linear_composes_as_matrix_product(f in quadratic(), a in matrix(), b in matrix()) {
        // Column convention: applying A then B is the substitution for B·A.
        prop_assert_eq!(f.apply_linear(&a).apply_linear(&b), f.apply_linear(&mat_mul(&b, &a)));
    }

    #[test]
    fn coefficient_vector_round_trips(f in quadratic()) {
        prop_assert_eq!(FreeElement::from_coefficient_vector(&f.coefficient_vector(2), 2), f);
    }

    #[test]
    fn jacobi_identity(a in quadratic(), b in quadratic(), c in quadratic()) {
        let j = a.commutator(&b.commutator(&c))
            .add(&b.commutator(&c.commutator(&a)))
            .add(&c.commutator(&a.commutator(&b)));
        prop_assert!(j.is_zero());
    }

    #[test]
    fn word_index_round_trips(idx in 0usize..256) {
        let w = Word::from_index(idx, 4);
        prop_assert_eq!(w.len(), 4);
        prop_assert_eq!(w.index(), idx);
    }
}

#[test]
fn words_are_lex_ordered_by_index() {
    let words: Vec<Word> = Word::all_of_degree(2).collect();
    assert_eq!(words.len(), 16);
    assert!(words.windows(2).all(|w| w[0] < w[1]));
    assert_eq!(words[4 + 3], Word::new(&[1, 3]));
}

#[test]
fn anticommutator_of_generators() {
    let [x0, x1, ..] = FreeElement::<Gaussian>::gens();
    let ac = x0.anticommutator(&x1);
    assert_eq!(ac.coeff(&Word::new(&[0, 1])), g(1));
    assert_eq!(ac.coeff(&Word::new(&[1, 0])), g(1));
    assert_eq!(ac.num_terms(), 2);
    assert_eq!(x0.pow(3).degree(), Some(3));
}
