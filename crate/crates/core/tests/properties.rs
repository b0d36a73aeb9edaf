//! Invariants of the number-field, trinomial, surface and elliptic layers.

use num_bigint::BigInt;
use proptest::prelude::*;

use quintrin_core::algebra::rational::{int, rat, square_class};
use quintrin_core::algebra::{rational_reconstruct, ComplexBall, Rational, UniPoly};
use quintrin_core::curve::curve_from_t;
use quintrin_core::elliptic::{e0, EcPoint};
use quintrin_core::surface::{form_value, RationalCurve};
use quintrin_core::verify::expected_t65_points;
use quintrin_core::{quadratic_twist_factor, NumberField, TwistRelation, Trinomial, WeierstrassCurve};

fn rational(num: i64, den: i64) -> impl Strategy<Value = Rational> {
    (-num..=num, 1..=den).prop_map(|(n, d)| rat(n, d))
}

fn nonzero(num: i64, den: i64) -> impl Strategy<Value = Rational> {
    rational(num, den).prop_filter("nonzero", |x| x != &int(0))
}

fn squarefree_d() -> impl Strategy<Value = i64> {
    prop::sample::select(vec![-15i64, -10, -7, -6, -5, -3, -2, -1, 2, 3, 5, 6, 7, 10, 11, 13, 14, 15])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn equivalence_class_is_scaling_invariant(a in nonzero(50, 9), b in nonzero(50, 9), l in nonzero(9, 5)) {
        let f = Trinomial::new(a, b);
        let g = f.scale(&l).unwrap();
        prop_assert_eq!(f.equiv_class(), g.equiv_class());
        prop_assert!(f.is_equivalent(&g));
    }

    #[test]
    fn pure_class_is_scaling_invariant(b in nonzero(500, 9), l in nonzero(9, 5)) {
        let f = Trinomial::new(int(0), b);
        prop_assert_eq!(f.equiv_class(), f.scale(&l).unwrap().equiv_class());
    }

    #[test]
    fn char_poly_annihilates(cs in prop::collection::vec(rational(20, 6), 5)) {
        let k = NumberField::new(&UniPoly::from_i64(&[3, 1, 0, 0, 0, 1])).unwrap();
        let beta = k.element(cs).unwrap();
        let chi = beta.char_poly();
        prop_assert_eq!(chi.degree(), Some(5));
        prop_assert!(beta.eval_poly(&chi).is_zero());
    }

    #[test]
    fn norm_is_multiplicative(x in prop::collection::vec(rational(9, 4), 5), y in prop::collection::vec(rational(9, 4), 5)) {
        let k = NumberField::new(&UniPoly::from_i64(&[-18, 0, 0, 0, 0, 1])).unwrap();
        let (x, y) = (k.element(x).unwrap(), k.element(y).unwrap());
        prop_assert_eq!(x.mul(&y).unwrap().norm(), x.norm() * y.norm());
        prop_assert_eq!(x.add(&y).unwrap().trace(), x.trace() + y.trace());
    }

    #[test]
    fn reconstruction_recovers_small_rationals(n in -10_000i64..10_000, d in 1i64..1000, wiggle in -1000i64..1000) {
        let q = rat(n, d);
        let radius = rat(1, 1_000_000_000_000);
        let re = &q + rat(wiggle, 1_000_000_000_000_000);
        let ball = ComplexBall { re, im: int(0), radius, bits: 64 };
        prop_assert_eq!(rational_reconstruct(&ball, &BigInt::from(1000)), Some(q));
    }

    #[test]
    fn surface_form_is_homogeneous_sextic(cs in prop::collection::vec(rational(30, 7), 4), l in nonzero(7, 5)) {
        let scaled: Vec<Rational> = cs.iter().map(|c| c * &l).collect();
        let l6 = (0..6).fold(int(1), |acc, _| acc * &l);
        prop_assert_eq!(form_value(&scaled).unwrap(), form_value(&cs).unwrap() * l6);
    }

    #[test]
    fn rational_curves_stay_on_surface(s in rational(1000, 97)) {
        for r in RationalCurve::ALL {
            prop_assert!(form_value(&r.coords(&s)).unwrap() == int(0));
        }
    }

    #[test]
    fn twists_share_j_and_are_detected(d in squarefree_d(), u in nonzero(9, 7)) {
        let base = [e0(), WeierstrassCurve::short(int(-43), int(166)).unwrap()];
        for e in base {
            let dd = rat(d, 1) * &u * &u;
            let t = e.twist(&dd).unwrap();
            prop_assert_eq!(t.j_invariant(), e.j_invariant());
            prop_assert_eq!(
                quadratic_twist_factor(&e, &t).unwrap(),
                TwistRelation::Twist(square_class(&dd).unwrap())
            );
        }
    }

    #[test]
    fn group_law_on_multiples(k1 in -12i64..12, k2 in -12i64..12, k3 in -12i64..12) {
        // y^2 + y = x^3 - x with a point of infinite order
        let e = WeierstrassCurve::new(int(0), int(0), int(1), int(-1), int(0)).unwrap();
        let p = EcPoint::from_i64(0, 0);
        let m = |k: i64| e.scalar_mul(&BigInt::from(k), &p).unwrap();
        let (a, b, c) = (m(k1), m(k2), m(k3));
        let ab = e.add(&a, &b).unwrap();
        prop_assert_eq!(&ab, &e.add(&b, &a).unwrap());
        prop_assert_eq!(&ab, &m(k1 + k2));
        prop_assert_eq!(e.add(&ab, &c).unwrap(), e.add(&a, &e.add(&b, &c).unwrap()).unwrap());
        prop_assert_eq!(e.add(&a, &e.neg(&a).unwrap()).unwrap(), EcPoint::Infinity);
    }
}

#[test]
fn associativity_on_torsion_curve() {
    // (3, 8) generates the rational torsion of y^2 = x^3 - 43x + 166
    let e = WeierstrassCurve::short(int(-43), int(166)).unwrap();
    let p = EcPoint::from_i64(3, 8);
    let pts: Vec<EcPoint> = (0..7).map(|k| e.scalar_mul(&BigInt::from(k), &p).unwrap()).collect();
    assert_eq!(e.scalar_mul(&BigInt::from(7), &p).unwrap(), EcPoint::Infinity);
    let mut count = 0;
    for (i, a) in pts.iter().enumerate() {
        for b in &pts[i..] {
            for c in &pts {
                let lhs = e.add(&e.add(a, b).unwrap(), c).unwrap();
                let rhs = e.add(a, &e.add(b, c).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
                count += 1;
            }
        }
    }
    assert!(count >= 20);
}

#[test]
fn curve_points_round_trip_through_elements() {
    let c = curve_from_t(&rat(6, 5)).unwrap();
    for (p, _) in expected_t65_points() {
        let beta = c.element(&p).unwrap();
        assert_eq!(c.trinomial_to_point(&beta).unwrap(), p);
        let chi = beta.char_poly();
        for k in 2..=4 {
            assert_eq!(chi.coeff(k), int(0));
        }
    }
}
