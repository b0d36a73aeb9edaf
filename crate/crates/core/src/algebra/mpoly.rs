//! Sparse multivariate polynomials over Q in a fixed number of variables.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::UniPoly;
use super::rational::{common_denominator, Rational};

/// Exponent vector of length `nvars`.
pub type Monomial = Vec<u32>;

/// Terms are keyed by exponent vector; zero coefficients are never stored.
/// `BTreeMap` order on exponent vectors is lexicographic with `x_0` most
/// significant, which is the monomial order used by [`MPoly::div_rem`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(e, Rational::one());
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars);
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[u32]) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, e: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[i]).max()
    }

    /// True when every term has total degree `d`.
    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.terms.keys().all(|e| e.iter().sum::<u32>() == d)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero(self.nvars);
        }
        MPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        assert_eq!(x.len(), self.nvars);
        let mut total = Rational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (xi, &k) in x.iter().zip(e) {
                if k > 0 {
                    term *= num_traits::pow(xi.clone(), k as usize);
                }
            }
            total += term;
        }
        total
    }

    /// Evaluates at an integer point.
    pub fn eval_int(&self, x: &[BigInt]) -> Rational {
        let xs: Vec<Rational> = x.iter().cloned().map(Rational::from_integer).collect();
        self.eval(&xs)
    }

    /// Replaces `x_i` by `q`.
    pub fn substitute(&self, i: usize, q: &MPoly) -> Self {
        assert_eq!(q.nvars, self.nvars);
        let maxdeg = self.degree_in(i).unwrap_or(0);
        let mut powers = vec![Self::one(self.nvars)];
        for k in 1..=maxdeg as usize {
            powers.push(&powers[k - 1] * q);
        }
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            let k = std::mem::replace(&mut rest[i], 0);
            let mono = Self::from_terms(self.nvars, [(rest, c.clone())]);
            out = &out + &(&mono * &powers[k as usize]);
        }
        out
    }

    /// The coefficient of `x_i^k`, as a polynomial in the remaining variables
    /// (variable count unchanged, `x_i` absent).
    pub fn coefficient_in(&self, i: usize, k: u32) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] == k {
                let mut r = e.clone();
                r[i] = 0;
                out.add_term(r, c.clone());
            }
        }
        out
    }

    /// Constant value if the polynomial has no non-constant terms.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&k| k == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Views the polynomial as univariate in `x_i` when no other variable occurs.
    pub fn as_univariate(&self, i: usize) -> Option<UniPoly> {
        let mut coeffs = vec![Rational::zero(); self.degree_in(i).unwrap_or(0) as usize + 1];
        for (e, c) in &self.terms {
            if e.iter().enumerate().any(|(j, &k)| j != i && k > 0) {
                return None;
            }
            coeffs[e[i] as usize] = c.clone();
        }
        Some(UniPoly::new(coeffs))
    }

    /// `self = content * primitive` with integer coefficients of gcd 1 and the
    /// lexicographically largest term positive.
    pub fn primitive_integer_part(&self) -> (Rational, MPoly) {
        if self.is_zero() {
            return (Rational::zero(), self.clone());
        }
        let den = common_denominator(self.terms.values());
        let denr = Rational::from_integer(den.clone());
        let ints: Vec<(Monomial, BigInt)> =
            self.terms.iter().map(|(e, c)| (e.clone(), (c * &denr).to_integer())).collect();
        let mut g = ints.iter().fold(BigInt::zero(), |g, (_, c)| g.gcd(c));
        if ints.last().unwrap().1.is_negative() {
            g = -g;
        }
        let prim = Self::from_terms(
            self.nvars,
            ints.into_iter().map(|(e, c)| (e, Rational::from_integer(c / &g))),
        );
        (Rational::new(g, den), prim)
    }

    /// `Some(u)` with `self = u * other`, `u` a nonzero rational.
    pub fn unit_multiple_of(&self, other: &MPoly) -> Option<Rational> {
        if self.is_zero() || other.is_zero() || self.terms.len() != other.terms.len() {
            return None;
        }
        let (e0, c0) = other.terms.iter().next().unwrap();
        let u = self.terms.get(e0)? / c0;
        (self == &other.scale(&u)).then_some(u)
    }

    fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Division by a single divisor in lex order: `self = q * d + r` with no
    /// term of `r` divisible by the leading monomial of `d`. For one divisor
    /// the remainder is zero exactly when `d` divides `self`.
    pub fn div_rem(&self, d: &MPoly) -> (MPoly, MPoly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let (le, lc) = d.leading().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let mut q = Self::zero(self.nvars);
        let mut r = Self::zero(self.nvars);
        let mut p = self.clone();
        while let Some((e, c)) = p.leading().map(|(e, c)| (e.clone(), c.clone())) {
            if e.iter().zip(&le).all(|(a, b)| a >= b) {
                let shift: Monomial = e.iter().zip(&le).map(|(a, b)| a - b).collect();
                let factor = Self::from_terms(self.nvars, [(shift.clone(), &c / &lc)]);
                q.add_term(shift, &c / &lc);
                p = &p - &(&factor * d);
            } else {
                r.add_term(e.clone(), c);
                p.terms.remove(&e);
            }
        }
        (q, r)
    }

    /// Renders with the given variable names.
    pub fn display_with<'a>(&'a self, names: &'a [&'a str]) -> impl fmt::Display + 'a {
        Named { p: self, names }
    }
}

struct Named<'a> {
    p: &'a MPoly,
    names: &'a [&'a str],
}

impl fmt::Display for Named<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p.is_zero() {
            return write!(f, "0");
        }
        // highest total degree first, lex within a degree
        let mut terms: Vec<_> = self.p.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        for (idx, (e, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    let name = self.names.get(i).copied().unwrap_or("?");
                    if k == 1 {
                        name.to_string()
                    } else {
                        format!("{name}^{k}")
                    }
                })
                .collect();
            let coeff = if mag.is_integer() { mag.to_string() } else { format!("({mag})") };
            if vars.is_empty() {
                write!(f, "{coeff}")?;
            } else if mag.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{coeff}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("x{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let text = self.display_with(&refs).to_string();
        f.write_str(&text)
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, o: &MPoly) -> MPoly {
        assert_eq!(self.nvars, o.nvars);
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, o: &MPoly) -> MPoly {
        self + &(-o)
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, o: &MPoly) -> MPoly {
        assert_eq!(self.nvars, o.nvars);
        let mut out = MPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                let e: Monomial = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for MPoly {
            type Output = MPoly;
            fn $m(self, o: MPoly) -> MPoly { (&self).$m(&o) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    fn vars() -> (MPoly, MPoly, MPoly) {
        (MPoly::var(3, 0), MPoly::var(3, 1), MPoly::var(3, 2))
    }

    #[test]
    fn ring_operations() {
        let (x, y, _) = vars();
        let s = &x + &y;
        let sq = s.pow(2);
        let expect = &(&(&x * &x) + (&(&x * &y).scale(&int(2)))) + &(&y * &y);
        assert_eq!(sq, expect);
        assert!((&sq - &expect).is_zero());
        assert_eq!(sq.total_degree(), Some(2));
        assert!(sq.is_homogeneous(2));
        assert_eq!(sq.eval(&[int(2), int(3), int(7)]), int(25));
    }

    #[test]
    fn substitution_and_coefficients() {
        let (x, y, z) = vars();
        let p = &(&x * &x) + &(&y * &z);
        let q = p.substitute(0, &(&y + &z));
        assert_eq!(q.eval(&[int(0), int(1), int(2)]), int(11));
        assert_eq!(p.coefficient_in(1, 1), z);
        assert_eq!(p.coefficient_in(0, 2).as_constant(), Some(int(1)));
        let u = (&x.pow(3) - &x.scale(&rat(1, 2))).as_univariate(0).unwrap();
        assert_eq!(u, UniPoly::new(vec![int(0), rat(-1, 2), int(0), int(1)]));
        assert!(p.as_univariate(0).is_none());
    }

    #[test]
    fn exact_division() {
        let (x, y, z) = vars();
        let d = &(&x * &y) + &z.pow(2);
        let l = &x.scale(&int(3)) - &y;
        let f = &d * &l;
        let (q, r) = f.div_rem(&d);
        assert!(r.is_zero());
        assert_eq!(q, l);
        let (_, r2) = (&f + &x).div_rem(&d);
        assert!(!r2.is_zero());
    }

    #[test]
    fn primitive_and_unit_multiples() {
        let (x, y, _) = vars();
        let p = &x.scale(&rat(3, 4)) - &y.scale(&rat(9, 2));
        let (c, prim) = p.primitive_integer_part();
        assert_eq!(c, rat(3, 4));
        assert_eq!(prim, &x - &y.scale(&int(6)));
        assert_eq!(p.unit_multiple_of(&prim), Some(rat(3, 4)));
        assert_eq!(p.unit_multiple_of(&x), None);
    }

    #[test]
    fn display_names() {
        let (x, y, _) = vars();
        let p = &(&x.pow(2).scale(&int(3)) - &(&x * &y)) + &MPoly::constant(3, rat(-1, 2));
        assert_eq!(p.display_with(&["a", "b", "c"]).to_string(), "3*a^2 - a*b - (1/2)");
    }
}
