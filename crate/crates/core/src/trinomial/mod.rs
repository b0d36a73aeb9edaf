//! Quintic trinomials `x^5 + a x + b` and their classification up to scaling.
//!
//! Two trinomials are equivalent when `g(x) = l^-5 f(l x)` for a rational
//! `l != 0`; scaling sends `(a, b)` to `(a / l^4, b / l^5)`. When `a` and `b`
//! are both nonzero the class is determined by `t = a^5 / b^4`, and
//! `x^5 + t x + t` is the canonical representative.

mod families;
mod galois;

use std::fmt;

use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::algebra::rational::{fifth_power_class, parse_rational, pow};
use crate::algebra::{Rational, UniPoly};
use crate::error::{Error, Result};

pub use families::{
    dihedral_family, sw2_family, two_trinomial_family, verify_pair, weber_family, LeadingTrinomial, PairFamily,
    Sw2Member,
};
pub use galois::{galois_type_heuristic, GaloisEvidence, GaloisGroup, GaloisGuess};

/// The monic trinomial `x^5 + a x + b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Trinomial {
    #[serde(with = "crate::algebra::rational::serde_str")]
    pub a: Rational,
    #[serde(with = "crate::algebra::rational::serde_str")]
    pub b: Rational,
}

/// Invariant of a trinomial under scaling.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum EquivClass {
    /// `a != 0`, `b != 0`: carries `t = a^5 / b^4`.
    Generic(Rational),
    /// `a = 0`, `b != 0`: carries the fifth-power class of `b`.
    Pure(Rational),
    /// `b = 0`, `a != 0`: all such trinomials are equivalent to `x^5 + x`.
    LinearOnly,
    /// `a = b = 0`.
    Degenerate,
}

impl EquivClass {
    pub fn kind(&self) -> &'static str {
        match self {
            EquivClass::Generic(_) => "generic",
            EquivClass::Pure(_) => "pure",
            EquivClass::LinearOnly => "linear-only",
            EquivClass::Degenerate => "degenerate",
        }
    }

    pub fn value(&self) -> Option<&Rational> {
        match self {
            EquivClass::Generic(v) | EquivClass::Pure(v) => Some(v),
            _ => None,
        }
    }
}

impl fmt::Display for EquivClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value() {
            Some(v) => write!(f, "{}({})", self.kind(), v),
            None => write!(f, "{}", self.kind()),
        }
    }
}

impl Serialize for EquivClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("EquivClass", 2)?;
        st.serialize_field("kind", self.kind())?;
        st.serialize_field("value", &self.value().map(|v| v.to_string()))?;
        st.end()
    }
}

impl Trinomial {
    pub fn new(a: Rational, b: Rational) -> Self {
        Trinomial { a, b }
    }

    /// `l x^5 + a x + b` divided through by `l`.
    pub fn with_leading(l: &Rational, a: &Rational, b: &Rational) -> Result<Self> {
        if l.is_zero() {
            return Err(Error::UndefinedInput("leading coefficient 0".into()));
        }
        Ok(Trinomial { a: a / l, b: b / l })
    }

    /// Parses `a` and `b` given as `"p/q"` strings.
    pub fn parse(a: &str, b: &str) -> Result<Self> {
        Ok(Trinomial { a: parse_rational(a)?, b: parse_rational(b)? })
    }

    /// Recognises `l x^5 + a x + b` among univariate polynomials.
    pub fn from_poly(p: &UniPoly) -> Option<Self> {
        if p.degree() != Some(5) || (2..5).any(|k| !p.coeff(k).is_zero()) {
            return None;
        }
        Trinomial::with_leading(&p.coeff(5), &p.coeff(1), &p.coeff(0)).ok()
    }

    /// The t-form `x^5 + t x + t`.
    pub fn t_form(t: &Rational) -> Self {
        Trinomial { a: t.clone(), b: t.clone() }
    }

    pub fn to_poly(&self) -> UniPoly {
        let z = Rational::zero();
        UniPoly::new(vec![self.b.clone(), self.a.clone(), z.clone(), z.clone(), z, Rational::one()])
    }

    pub fn equiv_class(&self) -> EquivClass {
        match (self.a.is_zero(), self.b.is_zero()) {
            (true, true) => EquivClass::Degenerate,
            (false, true) => EquivClass::LinearOnly,
            (true, false) => EquivClass::Pure(fifth_power_class(&self.b).expect("b is nonzero")),
            (false, false) => EquivClass::Generic(pow(&self.a, 5) / pow(&self.b, 4)),
        }
    }

    pub fn is_equivalent(&self, other: &Trinomial) -> bool {
        self.equiv_class() == other.equiv_class()
    }

    /// `l^-5 f(l x)`.
    pub fn scale(&self, l: &Rational) -> Result<Self> {
        if l.is_zero() {
            return Err(Error::UndefinedInput("scaling by 0".into()));
        }
        Ok(Trinomial { a: &self.a / pow(l, 4), b: &self.b / pow(l, 5) })
    }

    /// `(x^5 + t x + t, l)` with `l = b / a`, so that the t-form is `self.scale(l)`.
    pub fn normalize_t_form(&self) -> Result<(Trinomial, Rational)> {
        if self.a.is_zero() || self.b.is_zero() {
            return Err(Error::NotNormalizable(self.equiv_class()));
        }
        let l = &self.b / &self.a;
        let normal = self.scale(&l)?;
        debug_assert_eq!(normal.a, normal.b);
        Ok((normal, l))
    }

    /// `256 a^5 + 3125 b^4`, the discriminant of `x^5 + a x + b`.
    pub fn discriminant(&self) -> Rational {
        pow(&self.a, 5) * Rational::from_integer(256.into()) + pow(&self.b, 4) * Rational::from_integer(3125.into())
    }
}

impl fmt::Display for Trinomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}
