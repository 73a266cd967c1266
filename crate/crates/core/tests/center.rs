mod common;

use common::{g, nonzero_gaussian, sklyanin_param};
use proptest::prelude::*;
use quadralab::center::{
    chl_z1, chl_z2, components_central, displayed_square_families, proof_identity_suite, sklyanin_central_pair,
    square_candidates, uqsl2_generator_search,
};
use quadralab::presentations::chl_z_relations;
use quadralab::scalars::{Field, Gaussian, Scalar};
use quadralab::symmetry::Q3Convention;

fn on_locus() -> impl Strategy<Value = [Gaussian; 3]> {
    (sklyanin_param(), sklyanin_param()).prop_filter_map("degenerate", |(a, b)| {
        let den = Gaussian::one() + &(a.clone() * &b);
        let c = (-(a.clone() + &b)).div(&den).ok()?;
        let bad = |x: &Gaussian| x.is_zero() || x.is_one() || (-x.clone()).is_one();
        (!bad(&c)).then_some([a, b, c])
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn omega_pair_is_central_on_the_locus(p in on_locus()) {
        let (o0, o1) = sklyanin_central_pair(&p[0], &p[1], &p[2]).unwrap();
        prop_assert!(o0.certify().unwrap().central);
        prop_assert!(o1.certify().unwrap().central);
    }

    #[test]
    fn squares_are_central_off_the_locus(a in sklyanin_param(), b in sklyanin_param(), c in sklyanin_param()) {
        let sp = a.clone() + &b + &c + &(a.clone() * &b * &c);
        prop_assume!(!sp.is_zero());
        for cand in square_candidates(&a, &b, &c) {
            prop_assert!(cand.certify().unwrap().central, "{}", cand.label);
        }
    }

    #[test]
    fn z1_is_central(p in proptest::array::uniform4(nonzero_gaussian())) {
        let z1 = chl_z1(&p[0], &p[1], &p[2], &p[3]).unwrap();
        prop_assert!(z1.forms_agree());
        prop_assert!(z1.x_form.certify().unwrap().central);
    }
}

#[test]
fn omega_pair_needs_the_locus() {
    assert!(sklyanin_central_pair(&g(2), &g(3), &g(5)).is_err());
}

#[test]
fn z2_is_central_with_the_corrected_sign() {
    let (a, b, c, d) = (g(1), g(2), g(3), g(5));
    let rel = chl_z_relations(&a, &b, &c, &d).unwrap();
    let fixed = chl_z2(&a, &b, &c, &d, Q3Convention::SignCorrected).unwrap();
    assert!(components_central(&rel, &fixed.components()).unwrap());
    let literal = chl_z2(&a, &b, &c, &d, Q3Convention::AsPrinted).unwrap();
    assert!(!literal.matches_printed_formula());
}

#[test]
fn corrected_identities_hold_and_displayed_ones_do_not() {
    assert!(proof_identity_suite().unwrap().iter().all(|c| c.holds));
    assert!(displayed_square_families().iter().all(|c| !c.holds));
}

#[test]
fn uqsl2_search_finds_two_assignments() {
    let r = uqsl2_generator_search(&Gaussian::from_ratio(-1, 4)).unwrap();
    assert_eq!(r.solutions.len(), 2);
    assert!(!r.literal_relations_hold.iter().all(|&x| x));
}
