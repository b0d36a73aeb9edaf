//! Complex fixed-point numbers backed by big integers: the value is
//! `(re + i*im) * 2^-bits`. Rounding is floor; callers that need rigorous
//! enclosures certify afterwards with exact arithmetic.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedComplex {
    pub re: BigInt,
    pub im: BigInt,
    pub bits: u32,
}

/// `x * 2^-bits` as an `f64`, robust to very long mantissas.
pub fn scaled_to_f64(x: &BigInt, bits: u32) -> f64 {
    let len = x.bits() as i64;
    let excess = (len - 900).max(0);
    let head = (x >> excess as usize).to_f64().unwrap_or(0.0);
    head * 2f64.powi((excess - bits as i64).clamp(-1070, 1023) as i32)
}

fn round_rational(r: &Rational, bits: u32) -> BigInt {
    let scaled = r * Rational::from_integer(BigInt::from(1) << bits);
    scaled.floor().to_integer()
}

impl FixedComplex {
    pub fn zero(bits: u32) -> Self {
        FixedComplex { re: BigInt::zero(), im: BigInt::zero(), bits }
    }

    pub fn from_rational(r: &Rational, bits: u32) -> Self {
        FixedComplex { re: round_rational(r, bits), im: BigInt::zero(), bits }
    }

    pub fn from_rationals(re: &Rational, im: &Rational, bits: u32) -> Self {
        FixedComplex { re: round_rational(re, bits), im: round_rational(im, bits), bits }
    }

    pub fn from_f64(re: f64, im: f64, bits: u32) -> Self {
        let conv = |v: f64| {
            // exact binary expansion of the double, then rescale
            let r = Rational::from_float(v).unwrap_or_else(Rational::zero);
            round_rational(&r, bits)
        };
        FixedComplex { re: conv(re), im: conv(im), bits }
    }

    /// Exact value as a pair of rationals.
    pub fn to_rationals(&self) -> (Rational, Rational) {
        let den = BigInt::from(1) << self.bits;
        (
            Rational::new(self.re.clone(), den.clone()),
            Rational::new(self.im.clone(), den),
        )
    }

    pub fn re_f64(&self) -> f64 {
        scaled_to_f64(&self.re, self.bits)
    }

    pub fn im_f64(&self) -> f64 {
        scaled_to_f64(&self.im, self.bits)
    }

    pub fn abs_f64(&self) -> f64 {
        self.re_f64().hypot(self.im_f64())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        FixedComplex { re: self.re.clone(), im: -&self.im, bits: self.bits }
    }

    /// Changes the scale, truncating or padding the mantissas.
    pub fn with_bits(&self, bits: u32) -> Self {
        let shift = |x: &BigInt| {
            if bits >= self.bits {
                x << (bits - self.bits)
            } else {
                x >> (self.bits - bits)
            }
        };
        FixedComplex { re: shift(&self.re), im: shift(&self.im), bits }
    }

    /// `None` when dividing by zero.
    pub fn div(&self, d: &FixedComplex) -> Option<FixedComplex> {
        assert_eq!(self.bits, d.bits);
        let den = &d.re * &d.re + &d.im * &d.im;
        if den.is_zero() {
            return None;
        }
        let re = (&self.re * &d.re + &self.im * &d.im) << self.bits;
        let im = (&self.im * &d.re - &self.re * &d.im) << self.bits;
        Some(FixedComplex { re: re.div_floor(&den), im: im.div_floor(&den), bits: self.bits })
    }

    /// Largest absolute mantissa component, a cheap magnitude proxy.
    pub fn max_abs_mantissa(&self) -> BigInt {
        self.re.abs().max(self.im.abs())
    }
}

impl Add for &FixedComplex {
    type Output = FixedComplex;
    fn add(self, o: &FixedComplex) -> FixedComplex {
        assert_eq!(self.bits, o.bits);
        FixedComplex { re: &self.re + &o.re, im: &self.im + &o.im, bits: self.bits }
    }
}

impl Sub for &FixedComplex {
    type Output = FixedComplex;
    fn sub(self, o: &FixedComplex) -> FixedComplex {
        assert_eq!(self.bits, o.bits);
        FixedComplex { re: &self.re - &o.re, im: &self.im - &o.im, bits: self.bits }
    }
}

impl Mul for &FixedComplex {
    type Output = FixedComplex;
    fn mul(self, o: &FixedComplex) -> FixedComplex {
        assert_eq!(self.bits, o.bits);
        let re = (&self.re * &o.re - &self.im * &o.im) >> self.bits;
        let im = (&self.re * &o.im + &self.im * &o.re) >> self.bits;
        FixedComplex { re, im, bits: self.bits }
    }
}

impl Neg for &FixedComplex {
    type Output = FixedComplex;
    fn neg(self) -> FixedComplex {
        FixedComplex { re: -&self.re, im: -&self.im, bits: self.bits }
    }
}
