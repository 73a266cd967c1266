mod common;

use common::{g, nonzero_gaussian, sklyanin_param};
use proptest::prelude::*;
use quadralab::presentations::sklyanin_relations;
use quadralab::scalars::{Field, Gaussian};
use quadralab::symmetry::{
    chl_psi_report, criterion_map, gamma, heisenberg_checks, preserves_relations, psi, sklyanin_criterion,
    Q3Convention,
};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn criterion_matches_preservation(
        lam in proptest::array::uniform4(nonzero_gaussian()),
        al in proptest::array::uniform3(sklyanin_param()),
        i in 1usize..=3,
        forced in any::<bool>(),
    ) {
        let mut lam = lam;
        let mut al = al;
        if forced {
            // solve the three ratio conditions for λ0, α_j, α_k
            let (j, k) = [(2, 3), (3, 1), (1, 2)][i - 1];
            lam[0] = -(lam[2].clone() * &lam[3]).div(&lam[1]).unwrap();
            let li2 = lam[1].clone() * &lam[1];
            al[j - 1] = (lam[2].clone() * &lam[2]).div(&li2).unwrap();
            al[k - 1] = -(lam[3].clone() * &lam[3]).div(&li2).unwrap();
        }
        let rel = sklyanin_relations(&al[0], &al[1], &al[2]);
        let phi = criterion_map(&lam, i).unwrap();
        prop_assert_eq!(sklyanin_criterion(&lam, &al, i).unwrap(), preserves_relations(&phi, &rel).unwrap());
        if forced {
            prop_assert!(preserves_relations(&phi, &rel).unwrap());
        }
    }

    #[test]
    fn automorphisms_are_closed_under_composition_and_inverse(
        r in proptest::array::uniform3(sklyanin_param()),
        i in 1usize..=3,
        j in 1usize..=3,
    ) {
        let rel = sklyanin_relations(&(r[0].clone() * &r[0]), &(r[1].clone() * &r[1]), &(r[2].clone() * &r[2]));
        let (p, q) = (psi(i, &r).unwrap(), psi(j, &r).unwrap().compose(&gamma(i)));
        prop_assert!(preserves_relations(&p, &rel).unwrap());
        prop_assert!(preserves_relations(&p.compose(&q), &rel).unwrap());
        prop_assert!(preserves_relations(&q.inverse().unwrap(), &rel).unwrap());
        prop_assert!(p.compose(&p.inverse().unwrap()).is_identity());
    }

    #[test]
    fn psi_squares_are_multiples_of_gamma(r in proptest::array::uniform3(sklyanin_param()), i in 1usize..=3) {
        let (j, k) = [(2, 3), (3, 1), (1, 2)][i - 1];
        let ratio = psi(i, &r).unwrap().pow(2).ratio_to(&gamma(i)).unwrap();
        prop_assert_eq!(ratio, -(Gaussian::i() * &r[j - 1] * &r[k - 1]));
    }
}

#[test]
fn heisenberg_relations_hold() {
    assert!(heisenberg_checks(&[g(2), g(3), g(5)]).unwrap().all_pass());
    assert!(heisenberg_checks(&[g(3), Gaussian::i() + &g(1), g(-2)]).unwrap().all_pass());
}

#[test]
fn chl_psi_depends_on_the_q3_sign() {
    let (a, b, c, d) = (g(1), g(2), g(3), g(5));
    let fixed = chl_psi_report(&a, &b, &c, &d, Q3Convention::SignCorrected).unwrap();
    let literal = chl_psi_report(&a, &b, &c, &d, Q3Convention::AsPrinted).unwrap();
    assert!(fixed.preserves_relations && fixed.fourth_power_identity && fixed.square_negates_z0);
    assert!(!literal.preserves_relations && literal.fourth_power_identity && literal.square_negates_z0);
}

#[test]
fn singular_maps_are_rejected() {
    assert!(criterion_map(&[g(1), g(0), g(1), g(1)], 1).is_err());
    assert!(sklyanin_criterion(&[g(1), g(0), g(1), g(1)], &[g(2), g(3), g(5)], 1).is_err());
    assert!(gamma::<Gaussian>(2).pow(2).is_identity());
}
