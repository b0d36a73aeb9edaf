//! Explicit one-parameter families of quintic trinomials.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use super::Trinomial;
use crate::algebra::factor::is_irreducible;
use crate::algebra::rational::{int, pow};
use crate::algebra::{Rational, UniPoly};
use crate::error::{Error, Result};

/// `lead * x^5 + a x + b` with `lead != 0`, kept unnormalized.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeadingTrinomial {
    #[serde(with = "crate::algebra::rational::serde_str")]
    pub lead: Rational,
    #[serde(with = "crate::algebra::rational::serde_str")]
    pub a: Rational,
    #[serde(with = "crate::algebra::rational::serde_str")]
    pub b: Rational,
}

impl LeadingTrinomial {
    pub fn to_poly(&self) -> UniPoly {
        let z = Rational::zero();
        UniPoly::new(vec![self.b.clone(), self.a.clone(), z.clone(), z.clone(), z, self.lead.clone()])
    }

    pub fn monic(&self) -> Result<Trinomial> {
        Trinomial::with_leading(&self.lead, &self.a, &self.b)
    }
}

impl fmt::Display for LeadingTrinomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

/// `(4u^2 + 16) x^5 + (5u^2 - 5) x + (4u^2 + 10u + 6)`, made monic. Its
/// Galois group lies in F20 whenever it is irreducible.
pub fn weber_family(u: &Rational) -> Trinomial {
    let u2 = u * u;
    let lead = &u2 * int(4) + int(16);
    let a = &u2 * int(5) - int(5);
    let b = &u2 * int(4) + u * int(10) + int(6);
    Trinomial::with_leading(&lead, &a, &b).expect("4u^2 + 16 has no rational zero")
}

/// The Weber member at `u = s - 1/s`, whose Galois group lies in D10.
pub fn dihedral_family(s: &Rational) -> Result<Trinomial> {
    if s.is_zero() {
        return Err(Error::UndefinedInput("dihedral parameter s = 0".into()));
    }
    Ok(weber_family(&(s - s.recip())))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sw2Member {
    #[serde(with = "crate::algebra::rational::serde_str")]
    pub r: Rational,
    /// `m = r^3 (r + 1) (r - 1)^4`; the trinomial has a root in `Q[m^(1/5)]`.
    #[serde(with = "crate::algebra::rational::serde_str")]
    pub radicand: Rational,
    pub trinomial: Trinomial,
}

/// Pure quintic field `Q[m^(1/5)]` together with a trinomial having a root in it.
pub fn sw2_family(r: &Rational) -> Result<Sw2Member> {
    let one = Rational::one();
    if r.is_zero() || r == &one || r == &-&one {
        return Err(Error::UndefinedInput(format!("parameter r = {r} is excluded")));
    }
    let r2 = r * r;
    let radicand = pow(r, 3) * (r + &one) * pow(&(r - &one), 4);
    let den = pow(&(&r2 + &one), 4);
    let a = int(-80) * r * (&r2 - &one) * (&r2 + r - &one) * (&r2 - r * int(4) - &one) / &den;
    let quartic = pow(r, 4) + pow(r, 3) * int(22) - &r2 * int(6) - r * int(22) + &one;
    let b = int(-32) * r * (&r2 - &one) * quartic / &den;
    Ok(Sw2Member { r: r.clone(), radicand, trinomial: Trinomial::new(a, b) })
}

/// A field with two inequivalent trinomials: `f` and `h`, with `beta` a root
/// of `h` written in the power basis of a root `alpha` of `f`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairFamily {
    #[serde(with = "crate::algebra::rational::serde_str")]
    pub param: Rational,
    pub f: LeadingTrinomial,
    /// Coordinates of `beta` in `1, alpha, ..., alpha^4`.
    #[serde(with = "crate::algebra::rational::serde_vec")]
    pub beta: Vec<Rational>,
    pub h: LeadingTrinomial,
    pub f_irreducible: bool,
}

pub fn two_trinomial_family(a: &Rational) -> Result<PairFamily> {
    if a.is_zero() || a == &int(1) || a == &int(-8) {
        return Err(Error::UndefinedInput(format!("parameter a = {a} is excluded")));
    }
    let a2 = a * a;
    let a3 = &a2 * a;
    let f = LeadingTrinomial {
        lead: a * int(4) + int(32),
        a: &a2 * int(-5) + a * int(5),
        b: -&a3 + &a2,
    };
    let pre = (&a2 + a * int(4) - int(8)).recip();
    let beta = vec![
        &pre * (a * int(-4) + int(16)),
        &pre * (a * int(2) + int(4)),
        &pre * (a * int(-2) - int(16)),
        &pre * (a * int(8) + int(64)) / a,
        &pre * (&a2 * int(4) + a * int(16) - int(128)) / (&a2 - a),
    ];
    let h = LeadingTrinomial {
        lead: &a3 + &a2 * int(7) - a * int(8),
        a: &a2 * int(10) + a * int(115) - int(125),
        b: &a2 * int(2) - a * int(76) - int(250),
    };
    let f_irreducible = is_irreducible(&f.to_poly());
    Ok(PairFamily { param: a.clone(), f, beta, h, f_irreducible })
}

/// Exact check that `h(beta) = 0` in `Q[x]/(f)`.
pub fn verify_pair(pair: &PairFamily) -> bool {
    let f = pair.f.to_poly();
    let beta = UniPoly::new(pair.beta.clone());
    let h = pair.h.to_poly();
    let mut acc = UniPoly::zero();
    for c in h.coeffs().iter().rev() {
        acc = match (&(&acc * &beta) + &UniPoly::constant(c.clone())).rem(&f) {
            Ok(r) => r,
            Err(_) => return false,
        };
    }
    acc.is_zero()
}
