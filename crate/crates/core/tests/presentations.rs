mod common;

use common::{g, nonzero_gaussian, sklyanin_param};
use proptest::prelude::*;
use quadralab::presentations::{
    angle_invariant, classify_chl, cyclic_shift_map, isomorphism_substitutions, permutations4, sign_swap_map,
    sklyanin_relations, substitution_realizes, ChlClass, SklyaninLine,
};
use quadralab::scalars::{Field, Gaussian};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn substitutions_realize_the_isomorphisms(a in sklyanin_param(), b in sklyanin_param(), c in sklyanin_param()) {
        prop_assert_eq!(isomorphism_substitutions(&a, &b, &c).unwrap(), [true, true]);
    }

    #[test]
    fn cyclic_shift_rule_on_angle_invariants(a in sklyanin_param(), b in sklyanin_param(), c in sklyanin_param()) {
        let rel = sklyanin_relations(&a, &b, &c);
        for [p, q, r, s] in permutations4() {
            if let (Ok(l), Ok(m)) = (angle_invariant(&rel, [p, q, r, s]), angle_invariant(&rel, [p, r, s, q])) {
                prop_assert_eq!(m, [l[1].clone(), l[2].clone(), l[0].clone()]);
            }
        }
    }

    #[test]
    fn classification_is_projectively_invariant(a in nonzero_gaussian(), b in nonzero_gaussian(), d in nonzero_gaussian(), t in nonzero_gaussian()) {
        let c = -(b.clone() * &d).div(&a).unwrap();
        let p = [a, b, c, d];
        let scaled = p.clone().map(|x| x * &t);
        let (u, v) = (classify_chl(&p).unwrap(), classify_chl(&scaled).unwrap());
        prop_assert!(!matches!(u, ChlClass::OffQuadric { .. }), "on the quadric");
        prop_assert_eq!(u, v);
    }

    #[test]
    fn off_quadric_points_report_the_quadric(p in proptest::array::uniform4(nonzero_gaussian())) {
        let q = p[0].clone() * &p[2] + &(p[1].clone() * &p[3]);
        let cls = classify_chl(&p).unwrap();
        if q == g(0) {
            prop_assert!(!matches!(cls, ChlClass::OffQuadric { .. }), "on the quadric");
        } else {
            prop_assert_eq!(cls, ChlClass::OffQuadric { ac_plus_bd: q });
        }
    }
}

#[test]
fn lines_are_detected() {
    let i = Gaussian::i();
    // a = -i d, c = -i b
    let (b, d) = (g(2), g(3));
    let p = [-(i.clone() * &d), b.clone(), -(i.clone() * &b), d.clone()];
    assert!(matches!(classify_chl(&p).unwrap(), ChlClass::SklyaninLocus { line: SklyaninLine::L1, .. }));
    let p = [i.clone() * &d, b.clone(), i.clone() * &b, d];
    assert!(matches!(classify_chl(&p).unwrap(), ChlClass::SklyaninLocus { line: SklyaninLine::L2, .. }));
    assert!(classify_chl(&[g(0), g(0), g(0), g(0)]).is_err());
}

#[test]
fn substitution_directions() {
    let (a, b, c) = (g(2), g(3), g(5));
    let src = sklyanin_relations(&a, &b, &c);
    let cyc = sklyanin_relations(&b, &c, &a);
    let back = sklyanin_relations(&c, &a, &b);
    let m = cyclic_shift_map::<Gaussian>();
    assert!(substitution_realizes(&m, &src, &cyc).unwrap());
    assert!(!substitution_realizes(&m, &src, &back).unwrap());
    let swapped = sklyanin_relations(&-a.clone(), &-c.clone(), &-b.clone());
    assert!(substitution_realizes(&sign_swap_map::<Gaussian>(), &src, &swapped).unwrap());
}
