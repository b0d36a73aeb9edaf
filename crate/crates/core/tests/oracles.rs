//! Library results checked against independent, naive computations.

use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use quintrin_core::algebra::rational::{int, rat};
use quintrin_core::algebra::{complex_roots, discriminant, factor_over_q, resultant, Rational, UniPoly};
use quintrin_core::Trinomial;

fn poly(coeffs: Vec<i64>) -> UniPoly {
    UniPoly::from_i64(&coeffs)
}

/// Sylvester matrix of `p` and `q` (descending coefficients).
fn sylvester(p: &UniPoly, q: &UniPoly) -> Vec<Vec<Rational>> {
    let (m, n) = (p.degree().unwrap(), q.degree().unwrap());
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for (src, deg, copies) in [(p, m, n), (q, n, m)] {
        for shift in 0..copies {
            let mut row = vec![Rational::zero(); size];
            for k in 0..=deg {
                row[shift + k] = src.coeff(deg - k);
            }
            rows.push(row);
        }
    }
    rows
}

/// Determinant by Gaussian elimination over Q.
fn determinant(mut a: Vec<Vec<Rational>>) -> Rational {
    let n = a.len();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else { return Rational::zero() };
        if piv != col {
            a.swap(piv, col);
            det = -det;
        }
        det *= a[col][col].clone();
        for r in col + 1..n {
            let f = &a[r][col] / &a[col][col];
            if f.is_zero() {
                continue;
            }
            let pivot_row = a[col].clone();
            for (dst, src) in a[r].iter_mut().zip(&pivot_row).skip(col) {
                *dst -= &f * src;
            }
        }
    }
    det
}

fn small_poly(max_deg: usize) -> impl Strategy<Value = UniPoly> {
    (1..=max_deg)
        .prop_flat_map(|d| (prop::collection::vec(-9i64..=9, d), prop::sample::select(vec![-3i64, -2, -1, 1, 2, 3])))
        .prop_map(|(mut c, lead)| {
            c.push(lead);
            poly(c)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn resultant_matches_sylvester_determinant(p in small_poly(5), q in small_poly(5)) {
        prop_assert_eq!(resultant(&p, &q).unwrap(), determinant(sylvester(&p, &q)));
    }

    #[test]
    fn factorization_multiplies_back(p in small_poly(6), q in small_poly(3)) {
        let prod = &p * &q;
        let f = factor_over_q(&prod).unwrap();
        prop_assert_eq!(f.expand(), prod.clone());
        for (g, _) in &f.factors {
            prop_assert!(g.is_monic());
            prop_assert!(quintrin_core::algebra::factor::is_irreducible(g));
        }
    }

    #[test]
    fn discriminant_vanishes_iff_repeated_factor(p in small_poly(5), square in any::<bool>()) {
        let p = if square && p.degree() <= Some(2) { &p * &p } else { p };
        prop_assume!(p.degree() >= Some(2));
        let has_repeat = factor_over_q(&p).unwrap().has_repeated_factor();
        prop_assert_eq!(discriminant(&p).unwrap().is_zero(), has_repeat);
    }

    #[test]
    fn trinomial_discriminant_closed_form(a in -500i64..500, b in -500i64..500, d in 1i64..40) {
        let t = Trinomial::new(rat(a, d), rat(b, d + 1));
        prop_assert_eq!(t.discriminant(), discriminant(&t.to_poly()).unwrap());
    }

    #[test]
    fn root_balls_contain_the_trace(p in small_poly(6)) {
        prop_assume!(p.degree() >= Some(2) && p.is_squarefree());
        let roots = complex_roots(&p, 96).unwrap();
        prop_assert_eq!(roots.len(), p.degree().unwrap());
        let n = p.degree().unwrap();
        let trace = -p.coeff(n - 1) / p.leading();
        let re: Rational = roots.iter().map(|r| r.re.clone()).sum();
        let im: Rational = roots.iter().map(|r| r.im.clone()).sum();
        let slack: Rational = roots.iter().map(|r| r.radius.clone()).sum();
        prop_assert!((re - trace).abs() <= slack && im.abs() <= slack);
        // reals first, then pairs with the upper member first
        let reals = roots.iter().take_while(|r| r.is_real()).count();
        for pair in roots[reals..].chunks(2) {
            prop_assert!(pair[0].im > Rational::zero());
            prop_assert_eq!(&pair[0].re, &pair[1].re);
            prop_assert_eq!(&pair[0].im, &-pair[1].im.clone());
        }
    }
}

#[test]
fn sylvester_oracle_sanity() {
    // Res(x^2 - 2, x - 1) = (1)^2 - 2
    let m = sylvester(&poly(vec![-2, 0, 1]), &poly(vec![-1, 1]));
    assert_eq!(determinant(m), int(-1));
}
