//! Certified complex root isolation.
//!
//! Approximations come from Aberth iteration on a precision ladder. They are
//! then certified exactly: with `W_i = p(z_i) / (lc * prod_{j != i}(z_i - z_j))`
//! the disc of radius `n |W_i|` around `z_i` contains a root, and pairwise
//! disjoint discs contain exactly one root each. Real roots are identified
//! when a disc meets the real axis and its mirror image meets no other disc.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::fixed::FixedComplex;
use super::poly::UniPoly;
use super::rational::Rational;
use crate::error::{Error, Result};

/// A closed disc in the complex plane with dyadic centre and radius.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplexBall {
    #[serde(with = "super::rational::serde_str")]
    pub re: Rational,
    #[serde(with = "super::rational::serde_str")]
    pub im: Rational,
    #[serde(with = "super::rational::serde_str")]
    pub radius: Rational,
    pub bits: u32,
}

impl ComplexBall {
    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn contains(&self, re: &Rational, im: &Rational) -> bool {
        let dr = re - &self.re;
        let di = im - &self.im;
        &dr * &dr + &di * &di <= &self.radius * &self.radius
    }

    pub fn re_f64(&self) -> f64 {
        self.re.to_f64().unwrap_or(f64::NAN)
    }

    pub fn im_f64(&self) -> f64 {
        self.im.to_f64().unwrap_or(f64::NAN)
    }

    /// Centre rounded to a fixed-point value.
    pub fn center(&self, bits: u32) -> FixedComplex {
        FixedComplex::from_rationals(&self.re, &self.im, bits)
    }
}

type Gauss = (BigInt, BigInt);

fn gmul(a: &Gauss, b: &Gauss) -> Gauss {
    (&a.0 * &b.0 - &a.1 * &b.1, &a.0 * &b.1 + &a.1 * &b.0)
}

fn gnorm(a: &Gauss) -> BigInt {
    &a.0 * &a.0 + &a.1 * &a.1
}

fn gsub(a: &Gauss, b: &Gauss) -> Gauss {
    (&a.0 - &b.0, &a.1 - &b.1)
}

fn ceil_sqrt(x: &BigInt) -> BigInt {
    let s = x.sqrt();
    if &s * &s < *x {
        s + 1
    } else {
        s
    }
}

/// Isolates every complex root of a squarefree polynomial of degree >= 1.
///
/// Each returned ball contains exactly one root and has radius below
/// `2^-bits` on success. Real roots come first in ascending order, then
/// conjugate pairs (upper half-plane member first) by ascending imaginary
/// part. Fails with [`Error::NeedPrecision`] when certification does not go
/// through at this precision.
pub fn complex_roots(p: &UniPoly, bits: u32) -> Result<Vec<ComplexBall>> {
    let n = match p.degree() {
        Some(n) if n >= 1 => n,
        _ => return Err(Error::UndefinedInput("roots of a constant polynomial".into())),
    };
    if !p.is_squarefree() {
        return Err(Error::Usage("root isolation needs a squarefree polynomial".into()));
    }
    let (_, ints) = p.primitive_integer_part();
    if n == 1 {
        let r = Rational::new(-ints[0].clone(), ints[1].clone());
        return Ok(vec![ComplexBall { re: r, im: Rational::zero(), radius: Rational::zero(), bits }]);
    }
    let work = bits + 32;
    let approx = aberth(p, work);
    certify(&ints, &approx, bits)
}

/// Retries [`complex_roots`] with doubled precision up to `max_bits`.
pub fn complex_roots_adaptive(p: &UniPoly, bits: u32, max_bits: u32) -> Result<Vec<ComplexBall>> {
    let mut b = bits.max(16);
    loop {
        match complex_roots(p, b) {
            Err(Error::NeedPrecision { .. }) if b < max_bits => b = (b * 2).min(max_bits),
            other => return other,
        }
    }
}

fn horner(coeffs: &[FixedComplex], z: &FixedComplex) -> (FixedComplex, FixedComplex) {
    let bits = z.bits;
    let mut val = coeffs.last().unwrap().clone();
    let mut der = FixedComplex::zero(bits);
    for c in coeffs.iter().rev().skip(1) {
        der = &(&der * z) + &val;
        val = &(&val * z) + c;
    }
    (val, der)
}

fn root_bound(p: &UniPoly) -> f64 {
    let n = p.degree().unwrap();
    let lc = p.leading().to_f64().unwrap_or(1.0).abs();
    let mut bound: f64 = 0.0;
    for k in 1..=n {
        let c = p.coeff(n - k).to_f64().unwrap_or(f64::MAX).abs() / lc;
        let c = if k == n { c / 2.0 } else { c };
        bound = bound.max(c.powf(1.0 / k as f64));
    }
    (2.0 * bound).clamp(1e-6, 1e150)
}

/// Simultaneous approximations of all roots at `target` bits.
fn aberth(p: &UniPoly, target: u32) -> Vec<FixedComplex> {
    let n = p.degree().unwrap();
    let monic = p.monic();
    let radius = root_bound(p) * 0.5;
    let mut bits = 64u32.min(target);
    let mut z: Vec<FixedComplex> = (0..n)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4;
            FixedComplex::from_f64(radius * theta.cos(), radius * theta.sin(), bits)
        })
        .collect();
    let mut first = true;
    loop {
        let coeffs: Vec<FixedComplex> =
            monic.coeffs().iter().map(|c| FixedComplex::from_rational(c, bits)).collect();
        let max_iter = if first { 500 } else { 30 };
        let tol = BigInt::from(1u32) << 12u32;
        for _ in 0..max_iter {
            let step = aberth_sweep(&coeffs, &mut z);
            if step <= tol {
                break;
            }
        }
        first = false;
        if bits >= target {
            // one extra sweep to settle the last bits
            aberth_sweep(&coeffs, &mut z);
            return z;
        }
        bits = (bits * 2).min(target);
        z = z.iter().map(|x| x.with_bits(bits)).collect();
    }
}

// Gauss-Seidel Aberth update; returns the largest correction mantissa.
fn aberth_sweep(coeffs: &[FixedComplex], z: &mut [FixedComplex]) -> BigInt {
    let n = z.len();
    let bits = z[0].bits;
    let one = FixedComplex { re: BigInt::from(1u32) << bits, im: BigInt::zero(), bits };
    let mut largest = BigInt::zero();
    for i in 0..n {
        let (val, der) = horner(coeffs, &z[i]);
        if val.is_zero() {
            continue;
        }
        let newton = match val.div(&der) {
            Some(q) => q,
            None => {
                // stationary point: nudge off it
                let nudge = FixedComplex { re: BigInt::from(1u32) << (bits / 2), im: BigInt::from(1u32) << (bits / 2), bits };
                z[i] = &z[i] + &nudge;
                largest = largest.max(nudge.max_abs_mantissa());
                continue;
            }
        };
        let mut sum = FixedComplex::zero(bits);
        for j in 0..n {
            if j == i {
                continue;
            }
            let diff = &z[i] - &z[j];
            match one.div(&diff) {
                Some(q) => sum = &sum + &q,
                None => {
                    let nudge = FixedComplex { re: BigInt::from(1u32) << (bits / 2), im: BigInt::zero(), bits };
                    sum = &sum + (&one.div(&nudge).unwrap());
                }
            }
        }
        let denom = &one - &(&newton * &sum);
        let w = newton.div(&denom).unwrap_or(newton);
        largest = largest.max(w.max_abs_mantissa());
        z[i] = &z[i] - &w;
    }
    largest
}

fn need(bits: u32) -> Error {
    Error::NeedPrecision { bits }
}

fn certify(ints: &[BigInt], approx: &[FixedComplex], bits: u32) -> Result<Vec<ComplexBall>> {
    let n = ints.len() - 1;
    let w = approx[0].bits;
    let scale = BigInt::from(1u32) << w;
    let zs: Vec<Gauss> = approx.iter().map(|z| (z.re.clone(), z.im.clone())).collect();
    let lc = &ints[n];

    // powers of the scale for the homogenised Horner scheme
    let mut spow = vec![BigInt::from(1u32)];
    for k in 1..=n {
        spow.push(&spow[k - 1] * &scale);
    }
    let mut radii = Vec::with_capacity(n);
    for i in 0..n {
        let mut v: Gauss = (ints[n].clone(), BigInt::zero());
        for k in (0..n).rev() {
            v = gmul(&v, &zs[i]);
            v.0 += &ints[k] * &spow[n - k];
        }
        let mut d: Gauss = (BigInt::from(1u32), BigInt::zero());
        for j in 0..n {
            if j != i {
                d = gmul(&d, &gsub(&zs[i], &zs[j]));
            }
        }
        let dn = gnorm(&d);
        if dn.is_zero() {
            return Err(need(bits));
        }
        // (radius * 2^w)^2 = n^2 |V|^2 / (lc^2 |D|^2)
        let num = BigInt::from(n * n) * gnorm(&v);
        let den = lc * lc * dn;
        let x = (num + &den - 1u32) / den;
        radii.push(ceil_sqrt(&x));
    }
    if !pairwise_disjoint(&zs, &radii) {
        return Err(need(bits));
    }

    // mirror test: which discs meet the reflection of disc i
    let meets = |i: usize| -> Vec<usize> {
        let c = (zs[i].0.clone(), -&zs[i].1);
        (0..n)
            .filter(|&j| {
                let s = &radii[i] + &radii[j];
                gnorm(&gsub(&c, &zs[j])) <= &s * &s
            })
            .collect()
    };
    let mut reals: Vec<(Gauss, BigInt)> = Vec::new();
    let mut pairs: Vec<(Gauss, BigInt)> = Vec::new();
    for i in 0..n {
        let m = meets(i);
        if zs[i].1.abs() <= radii[i] {
            if m != [i] {
                return Err(need(bits));
            }
            reals.push(((zs[i].0.clone(), BigInt::zero()), radii[i].clone()));
        } else {
            if m.len() != 1 || meets(m[0]) != [i] {
                return Err(need(bits));
            }
            if zs[i].1.is_positive() {
                pairs.push((zs[i].clone(), radii[i].clone()));
            }
        }
    }
    if reals.len() + 2 * pairs.len() != n {
        return Err(need(bits));
    }
    reals.sort_by(|a, b| a.0 .0.cmp(&b.0 .0));
    pairs.sort_by(|a, b| a.0 .1.cmp(&b.0 .1).then(a.0 .0.cmp(&b.0 .0)));

    let mut centers = Vec::with_capacity(n);
    let mut rs = Vec::with_capacity(n);
    for (c, r) in &reals {
        centers.push(c.clone());
        rs.push(r.clone());
    }
    for (c, r) in &pairs {
        centers.push(c.clone());
        rs.push(r.clone());
        centers.push((c.0.clone(), -&c.1));
        rs.push(r.clone());
    }
    if !pairwise_disjoint(&centers, &rs) {
        return Err(need(bits));
    }
    // a real root lies within r of the snapped centre; the lower member of a
    // pair is the mirror image of the upper one
    let limit = BigInt::from(1u32) << (w - bits);
    let mut out = Vec::with_capacity(n);
    for (c, r) in centers.into_iter().zip(rs) {
        if r >= limit {
            return Err(need(bits));
        }
        out.push(ComplexBall {
            re: Rational::new(c.0, scale.clone()),
            im: Rational::new(c.1, scale.clone()),
            radius: Rational::new(r, scale.clone()),
            bits,
        });
    }
    Ok(out)
}

fn pairwise_disjoint(cs: &[Gauss], rs: &[BigInt]) -> bool {
    for i in 0..cs.len() {
        for j in i + 1..cs.len() {
            let s = &rs[i] + &rs[j];
            if gnorm(&gsub(&cs[i], &cs[j])) <= &s * &s {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    fn tol(bits: u32) -> Rational {
        Rational::new(BigInt::from(1), BigInt::from(1u32) << bits)
    }

    #[test]
    fn gaussian_unit_roots() {
        let p = UniPoly::from_i64(&[1, 0, 1]);
        let roots = complex_roots(&p, 100).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots[0].contains(&int(0), &int(1)));
        assert!(roots[1].contains(&int(0), &int(-1)));
        assert!(roots.iter().all(|b| b.radius < tol(100)));
    }

    #[test]
    fn real_roots_ascending() {
        // (x-1)(x+2)(x-3/2)
        let p = &(&UniPoly::linear_root(&int(1)) * &UniPoly::linear_root(&int(-2)))
            * &UniPoly::linear_root(&rat(3, 2));
        let roots = complex_roots(&p, 64).unwrap();
        assert!(roots.iter().all(ComplexBall::is_real));
        assert!(roots[0].contains(&int(-2), &int(0)));
        assert!(roots[1].contains(&int(1), &int(0)));
        assert!(roots[2].contains(&rat(3, 2), &int(0)));
    }

    #[test]
    fn fifth_root_of_eighteen() {
        let p = UniPoly::from_i64(&[-18, 0, 0, 0, 0, 1]);
        let roots = complex_roots(&p, 256).unwrap();
        assert_eq!(roots.iter().filter(|b| b.is_real()).count(), 1);
        let r = roots[0].re_f64();
        assert!((r - 18f64.powf(0.2)).abs() < 1e-12);
        // upper member first, ascending imaginary parts
        assert!(roots[1].im > Rational::zero() && roots[2].im < Rational::zero());
        assert!(roots[1].im < roots[3].im);
    }

    #[test]
    fn rejects_repeated_and_constant() {
        assert!(matches!(complex_roots(&UniPoly::from_i64(&[1, 2, 1]), 64), Err(Error::Usage(_))));
        assert!(complex_roots(&UniPoly::from_i64(&[3]), 64).is_err());
    }

    #[test]
    fn tenth_roots_of_unity() {
        let p = UniPoly::from_i64(&[-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]);
        let roots = complex_roots_adaptive(&p, 64, 1024).unwrap();
        assert_eq!(roots.len(), 10);
        assert_eq!(roots.iter().filter(|b| b.is_real()).count(), 2);
    }
}
