use num_bigint::BigInt;
use proptest::prelude::*;

use quintrin_core::algebra::factor::{cycle_type_mod_p, is_irreducible};
use quintrin_core::algebra::integer::{exact_sqrt, primes_up_to};
use quintrin_core::algebra::rational::{int, rat, square_class};
use quintrin_core::algebra::{Rational, UniPoly};
use quintrin_core::trinomial::{dihedral_family, sw2_family, two_trinomial_family, verify_pair, weber_family};
use quintrin_core::{has_root_in_field, GaloisGroup, NumberField, RootSearch, Trinomial};

fn cycle_types_allowed(f: &Trinomial, g: GaloisGroup) -> bool {
    let (_, ints) = f.to_poly().primitive_integer_part();
    primes_up_to(300).into_iter().filter_map(|p| cycle_type_mod_p(&ints, p)).all(|ct| g.allows(&ct))
}

fn param() -> impl Strategy<Value = Rational> {
    (-60i64..=60, 1i64..=9).prop_map(|(n, d)| rat(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn weber_members_have_f20_cycle_types(u in param()) {
        let f = weber_family(&u);
        prop_assume!(is_irreducible(&f.to_poly()));
        prop_assert!(cycle_types_allowed(&f, GaloisGroup::F20));
    }

    #[test]
    fn dihedral_members_have_d10_cycle_types(s in param()) {
        prop_assume!(s != int(0));
        let f = dihedral_family(&s).unwrap();
        prop_assume!(is_irreducible(&f.to_poly()));
        prop_assert!(exact_sqrt(&square_class(&f.discriminant()).unwrap()).is_some());
        prop_assert!(cycle_types_allowed(&f, GaloisGroup::D10));
    }

    #[test]
    fn pair_identity_holds(a in param()) {
        prop_assume!(![int(0), int(1), int(-8)].contains(&a));
        let p = two_trinomial_family(&a).unwrap();
        prop_assume!(p.h.lead != int(0) && p.f.lead != int(0));
        prop_assert!(verify_pair(&p));
    }
}

#[test]
fn sw2_members_have_roots_in_the_pure_field() {
    for r in [rat(2, 1), rat(3, 1), rat(-2, 1), rat(1, 2), rat(5, 3)] {
        let m = sw2_family(&r).unwrap();
        let mut c = vec![int(0); 6];
        c[0] = -m.radicand.clone();
        c[5] = int(1);
        let Ok(k) = NumberField::new(&UniPoly::new(c)) else { continue };
        let f = m.trinomial.to_poly();
        match has_root_in_field(&f, &k, 512, &BigInt::from(10u64.pow(12))).unwrap() {
            RootSearch::Certificate(beta) => assert!(beta.eval_poly(&f).is_zero(), "r = {r}"),
            other => panic!("r = {r}: {other:?}"),
        }
    }
    for bad in [int(0), int(1), int(-1)] {
        assert!(sw2_family(&bad).is_err());
    }
}
