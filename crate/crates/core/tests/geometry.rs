mod common;

use common::{g, sklyanin_param};
use proptest::prelude::*;
use quadralab::geometry::{point_table, quadric_det, verify_gamma, verify_minor_factorizations, ParamPolys};
use quadralab::scalars::{Gaussian, Scalar};

fn roots() -> impl Strategy<Value = [Gaussian; 3]> {
    // distinct squares away from 0 and 1 keep the 20 points distinct
    proptest::sample::subsequence(vec![2i64, 3, 5, 7, 11, 13], 3).prop_map(|v| [g(v[0]), g(v[1]), g(v[2])])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn gamma_is_the_zero_locus_of_the_relations(r in roots()) {
        let params = r.clone().map(|x| x.clone() * &x);
        let report = verify_gamma(&params, &r).unwrap();
        prop_assert!(report.all_pass(), "{:?}", report);
        prop_assert_eq!(report.distinct_points, 20);
    }

    #[test]
    fn quadric_determinant_at_a_point(a in sklyanin_param(), b in sklyanin_param(), c in sklyanin_param()) {
        let p = ParamPolys::numeric(&a, &b, &c);
        let sp = a.clone() + &b + &c + &(a * &b * &c);
        let det = quadric_det(&p);
        prop_assert_eq!(det.constant_value().unwrap_or_else(Gaussian::zero), -(sp.clone() * &sp));
    }
}

#[test]
fn minors_factor_symbolically() {
    let (h, gs) = verify_minor_factorizations(&ParamPolys::symbolic());
    assert_eq!(h.len() + gs.len(), 30);
    assert!(h.iter().chain(&gs).all(|c| c.holds));
}

#[test]
fn point_table_has_five_strata_of_four() {
    let t = point_table(&g(2), &g(3), &g(5)).unwrap();
    assert_eq!(t.points().count(), 20);
    for (s, p) in t.points() {
        assert_eq!(t.stratum_of(p), Some(s));
    }
}

#[test]
fn wrong_roots_are_rejected() {
    let report = verify_gamma(&[g(4), g(9), g(25)], &[g(2), g(3), g(7)]);
    assert!(report.map_or(true, |r| !r.all_pass()));
}
