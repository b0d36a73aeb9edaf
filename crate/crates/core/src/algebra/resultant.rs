//! Resultants and discriminants via the Euclidean remainder sequence over Q.

use num_traits::{One, Zero};

use super::poly::UniPoly;
use super::rational::Rational;
use crate::error::{Error, Result};

/// `Res(p, q) = lc(p)^deg(q) * prod q(root_i(p))`.
///
/// If exactly one input is the zero polynomial the resultant is 0.
pub fn resultant(p: &UniPoly, q: &UniPoly) -> Result<Rational> {
    if p.is_zero() && q.is_zero() {
        return Err(Error::UndefinedInput("resultant of two zero polynomials".into()));
    }
    if p.is_zero() || q.is_zero() {
        return Ok(Rational::zero());
    }
    let mut f = p.clone();
    let mut g = q.clone();
    let mut acc = Rational::one();
    loop {
        let m = f.degree().unwrap();
        let n = g.degree().unwrap();
        if n == 0 {
            return Ok(acc * num_traits::pow(g.leading(), m));
        }
        if m == 0 {
            return Ok(acc * num_traits::pow(f.leading(), n));
        }
        let r = f.rem(&g)?;
        if r.is_zero() {
            return Ok(Rational::zero());
        }
        let s = r.degree().unwrap();
        // Res(f, g) = (-1)^{mn} lc(g)^{m-s} Res(g, r)
        if (m * n) % 2 == 1 {
            acc = -acc;
        }
        acc *= num_traits::pow(g.leading(), m - s);
        f = g;
        g = r;
    }
}

/// `(-1)^{n(n-1)/2} Res(p, p') / lc(p)`; zero iff `p` has a repeated root.
pub fn discriminant(p: &UniPoly) -> Result<Rational> {
    let n = match p.degree() {
        Some(n) if n >= 1 => n,
        _ => return Err(Error::UndefinedInput("discriminant of a constant polynomial".into())),
    };
    let r = resultant(p, &p.derivative())?;
    let d = r / p.leading();
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -d } else { d })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    #[test]
    fn linear_and_shared_roots() {
        let a = UniPoly::from_i64(&[-2, 1]);
        let b = UniPoly::from_i64(&[-3, 1]);
        assert_eq!(resultant(&a, &b).unwrap(), int(-1));
        let c = UniPoly::from_i64(&[1, 0, 1]);
        assert_eq!(resultant(&c, &c).unwrap(), int(0));
        assert!(resultant(&UniPoly::zero(), &UniPoly::zero()).is_err());
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(discriminant(&UniPoly::from_i64(&[-1, 0, 1])).unwrap(), int(4));
        assert_eq!(discriminant(&UniPoly::from_i64(&[12, -5, 0, 0, 0, 1])).unwrap(), int(64_000_000));
        let t = rat(-3125, 256);
        let f = UniPoly::new(vec![t.clone(), t, int(0), int(0), int(0), int(1)]);
        assert_eq!(discriminant(&f).unwrap(), int(0));
        assert!(discriminant(&UniPoly::from_i64(&[3])).is_err());
    }

    #[test]
    fn resultant_of_quintic_with_derivative() {
        // disc = (-1)^10 Res(f, f') / 1
        let f = UniPoly::from_i64(&[12, -5, 0, 0, 0, 1]);
        let fp = UniPoly::from_i64(&[-5, 0, 0, 0, 5]);
        assert_eq!(resultant(&f, &fp).unwrap(), int(64_000_000));
    }
}
