//! Recovering a rational number from a certified enclosure.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::integer::mod_inverse;
use super::rational::Rational;
use super::roots::ComplexBall;

/// The unique rational of denominator at most `bound` inside `ball`, if the
/// ball meets the real axis and contains exactly one such rational.
pub fn rational_reconstruct(ball: &ComplexBall, bound: &BigInt) -> Option<Rational> {
    if !bound.is_positive() || ball.im.abs() > ball.radius {
        return None;
    }
    let lo = &ball.re - &ball.radius;
    let hi = &ball.re + &ball.radius;
    let q = simplest_in(&lo, &hi);
    if q.denom() > bound {
        return None;
    }
    let (left, right) = farey_neighbours(&q, bound);
    if left >= lo || right <= hi {
        return None;
    }
    Some(q)
}

/// The rational with least denominator (then least absolute value) in
/// the closed interval `[lo, hi]`.
pub fn simplest_in(lo: &Rational, hi: &Rational) -> Rational {
    debug_assert!(lo <= hi);
    if hi.is_negative() {
        return -simplest_in(&-hi, &-lo);
    }
    if !lo.is_positive() {
        return Rational::zero();
    }
    let k = lo.floor();
    if &k == lo {
        return k;
    }
    let up = &k + Rational::one();
    if &up <= hi {
        return up;
    }
    // lo, hi both in (k, k+1)
    let inner = simplest_in(&(hi - &k).recip(), &(lo - &k).recip());
    k + inner.recip()
}

/// Neighbours of `q` in the Farey sequence of order `bound`.
fn farey_neighbours(q: &Rational, bound: &BigInt) -> (Rational, Rational) {
    let a = q.numer();
    let b = q.denom();
    let largest = |d0: BigInt| -> BigInt { &d0 + b * (bound - &d0).div_floor(b) };
    let (dl, dr) = if b.is_one() {
        (bound.clone(), bound.clone())
    } else {
        let inv = mod_inverse(&a.mod_floor(b), b).expect("reduced fraction");
        (largest(inv.clone()), largest((b - inv).mod_floor(b)))
    };
    let left = Rational::new((a * &dl - 1) / b, dl);
    let right = Rational::new((a * &dr + 1) / b, dr);
    (left, right)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    fn ball(re: Rational, radius: Rational) -> ComplexBall {
        ComplexBall { re, im: Rational::zero(), radius, bits: 64 }
    }

    #[test]
    fn simplest_rationals() {
        assert_eq!(simplest_in(&rat(3, 10), &rat(4, 10)), rat(1, 3));
        assert_eq!(simplest_in(&rat(-7, 3), &rat(5, 2)), int(0));
        assert_eq!(simplest_in(&rat(-5, 2), &rat(-7, 3)), rat(-5, 2));
        assert_eq!(simplest_in(&rat(22, 7), &rat(22, 7)), rat(22, 7));
        assert_eq!(simplest_in(&rat(314, 100), &rat(315, 100)), rat(22, 7));
    }

    #[test]
    fn farey_neighbours_adjacent() {
        let (l, r) = farey_neighbours(&rat(1, 3), &BigInt::from(5));
        assert_eq!((l, r), (rat(1, 4), rat(2, 5)));
        let (l, r) = farey_neighbours(&int(2), &BigInt::from(4));
        assert_eq!((l, r), (rat(7, 4), rat(9, 4)));
    }

    #[test]
    fn unique_or_nothing() {
        let bound = BigInt::from(1000);
        let b = ball(rat(22, 7) + rat(1, 1_000_000_000), rat(1, 1_000_000));
        assert_eq!(rational_reconstruct(&b, &bound), Some(rat(22, 7)));
        // too wide: many small-denominator rationals inside
        let wide = ball(rat(22, 7), rat(1, 100));
        assert_eq!(rational_reconstruct(&wide, &bound), None);
        // denominator above the bound
        let tight = ball(rat(1, 1009), rat(1, 1_000_000_000_000));
        assert_eq!(rational_reconstruct(&tight, &bound), None);
        let off_axis = ComplexBall { re: int(1), im: int(1), radius: rat(1, 2), bits: 64 };
        assert_eq!(rational_reconstruct(&off_axis, &bound), None);
    }
}
