//! Dense univariate polynomials over Q.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::{common_denominator, parse_rational, Rational};
use crate::error::{Error, Result};

/// `coeffs[i]` is the coefficient of `x^i`; no trailing zeros are stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn from_integers(coeffs: &[BigInt]) -> Self {
        Self::new(coeffs.iter().cloned().map(Rational::from_integer).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    /// `x - r`
    pub fn linear_root(r: &Rational) -> Self {
        Self::new(vec![-r.clone(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Divides by the leading coefficient. The zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading().recip())
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// `self(inner(x))`
    pub fn compose(&self, inner: &UniPoly) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * inner) + &Self::constant(c.clone()))
    }

    /// `self(s * x)`
    pub fn scale_variable(&self, s: &Rational) -> Self {
        let mut p = Rational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c * &p);
            p *= s;
        }
        Self::new(out)
    }

    pub fn div_rem(&self, d: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dd = d
            .degree()
            .ok_or_else(|| Error::UndefinedInput("division by the zero polynomial".into()))?;
        let Some(n) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if n < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let inv = d.leading().recip();
        let mut r = self.coeffs.clone();
        let mut q = vec![Rational::zero(); n - dd + 1];
        for k in (0..=n - dd).rev() {
            let c = &r[k + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] -= &c * dc;
            }
            q[k] = c;
        }
        r.truncate(dd);
        Ok((Self::new(q), Self::new(r)))
    }

    pub fn rem(&self, d: &UniPoly) -> Result<UniPoly> {
        Ok(self.div_rem(d)?.1)
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => self.gcd(&self.derivative()).degree() == Some(0),
        }
    }

    /// Yun's algorithm: monic `a_i` with `monic(self) = prod a_i^i`, pairwise coprime
    /// and squarefree. Only factors of positive degree are returned.
    pub fn squarefree_decomposition(&self) -> Vec<(UniPoly, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut b = f.div_rem(&a0).unwrap().0;
        let mut c = fp.div_rem(&a0).unwrap().0;
        let mut d = &c - &b.derivative();
        let mut i = 1;
        loop {
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.div_rem(&a).unwrap().0;
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            c = d.div_rem(&a).unwrap().0;
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }

    /// Splits `self = content * primitive` with an integer primitive part whose
    /// leading coefficient is positive.
    pub fn primitive_integer_part(&self) -> (Rational, Vec<BigInt>) {
        if self.is_zero() {
            return (Rational::zero(), Vec::new());
        }
        let den = common_denominator(&self.coeffs);
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .collect();
        let mut g = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if ints.last().unwrap().is_negative() {
            g = -g;
        }
        let prim = ints.iter().map(|c| c / &g).collect();
        (Rational::new(g, den), prim)
    }

    /// Parses a comma-separated ascending coefficient list (`"-18,0,0,0,0,1"`),
    /// optionally wrapped in brackets with quoted entries (the JSON form).
    pub fn parse_coeffs(s: &str) -> Result<UniPoly> {
        let t = s.trim();
        let t = t.strip_prefix('[').and_then(|x| x.strip_suffix(']')).unwrap_or(t);
        if t.trim().is_empty() {
            return Err(Error::Parse { what: "coefficient list", input: s.to_string() });
        }
        let coeffs = t
            .split(',')
            .map(|c| parse_rational(c.trim().trim_matches('"')))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(coeffs))
    }

    /// Lexicographic comparison of coefficient sequences, constant term first.
    pub fn cmp_coeffs(&self, other: &UniPoly) -> Ordering {
        for (a, b) in self.coeffs.iter().zip(&other.coeffs) {
            match a.cmp(b) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        self.coeffs.len().cmp(&other.coeffs.len())
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                if mag.is_integer() {
                    write!(f, "{mag}")?;
                } else {
                    write!(f, "({mag})")?;
                }
            }
            match i {
                0 => {}
                1 => write!(f, "{}x", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}x^{i}", if show_coeff { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

impl Serialize for UniPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        super::rational::serde_vec::serialize(&self.coeffs, s)
    }
}

impl<'de> Deserialize<'de> for UniPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        super::rational::serde_vec::deserialize(d).map(UniPoly::new)
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for UniPoly {
            type Output = UniPoly;
            fn $m(self, rhs: UniPoly) -> UniPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    #[test]
    fn trims_and_degrees() {
        let p = UniPoly::new(vec![int(1), int(0), int(0)]);
        assert_eq!(p.degree(), Some(0));
        assert_eq!(UniPoly::zero().degree(), None);
        assert_eq!(UniPoly::from_i64(&[-18, 0, 0, 0, 0, 1]).degree(), Some(5));
    }

    #[test]
    fn division_identity() {
        let f = UniPoly::from_i64(&[12, -5, 0, 0, 0, 1]);
        let g = UniPoly::from_i64(&[3, 0, 2]);
        let (q, r) = f.div_rem(&g).unwrap();
        assert_eq!(&(&q * &g) + &r, f);
        assert!(r.degree().unwrap() < 2);
        assert!(f.div_rem(&UniPoly::zero()).is_err());
    }

    #[test]
    fn gcd_and_squarefree() {
        // (x-1)^2 (x+2)
        let f = UniPoly::from_i64(&[2, -3, 0, 1]);
        assert_eq!(f.gcd(&f.derivative()), UniPoly::from_i64(&[-1, 1]));
        assert!(!f.is_squarefree());
        let sq = f.squarefree_decomposition();
        assert_eq!(
            sq,
            vec![(UniPoly::from_i64(&[2, 1]), 1), (UniPoly::from_i64(&[-1, 1]), 2)]
        );
    }

    #[test]
    fn primitive_part_of_rational_poly() {
        let f = UniPoly::new(vec![rat(6, 5), rat(6, 5), int(0), int(0), int(0), int(1)]);
        let (c, p) = f.primitive_integer_part();
        assert_eq!(c, rat(1, 5));
        let expect: Vec<BigInt> = [6, 6, 0, 0, 0, 5].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(p, expect);
    }

    #[test]
    fn display_and_parse() {
        let f = UniPoly::new(vec![rat(-6, 5), rat(6, 5), int(0), int(0), int(-1), int(1)]);
        assert_eq!(f.to_string(), "x^5 - x^4 + (6/5)*x - (6/5)");
        let g = UniPoly::parse_coeffs("[\"-6/5\", \"6/5\", \"0\", \"0\", \"-1\", \"1\"]").unwrap();
        assert_eq!(f, g);
        assert_eq!(UniPoly::parse_coeffs("-18,0,0,0,0,1").unwrap(), UniPoly::from_i64(&[-18, 0, 0, 0, 0, 1]));
        assert!(UniPoly::parse_coeffs("1,x").is_err());
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(json, r#"["-6/5","6/5","0","0","-1","1"]"#);
    }

    #[test]
    fn compose_and_scale() {
        let f = UniPoly::from_i64(&[1, 0, 1]);
        let g = UniPoly::from_i64(&[1, 1]);
        assert_eq!(f.compose(&g), UniPoly::from_i64(&[2, 2, 1]));
        assert_eq!(f.scale_variable(&int(3)), UniPoly::from_i64(&[1, 0, 9]));
    }
}
