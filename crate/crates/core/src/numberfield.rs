//! Arithmetic in `K = Q[x]/(g)`, characteristic polynomials of
//! multiplication maps, and certified search for roots of a polynomial in K.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::algebra::factor::factor_over_q;
use crate::algebra::fixed::FixedComplex;
use crate::algebra::rational::square_class;
use crate::algebra::{
    complex_roots_adaptive, discriminant, rational_reconstruct, ComplexBall, MPoly, Rational, UniPoly,
};
use crate::error::{Error, Result};

pub const DEFAULT_PRECISION_BITS: u32 = 512;

/// `Q[x]/(g)` for monic `g`. Constructed through [`NumberField::new`] the
/// modulus is an irreducible quintic and the complex embeddings are cached.
#[derive(Debug)]
pub struct NumberField {
    modulus: UniPoly,
    embeddings: Vec<ComplexBall>,
    is_field: bool,
}

pub type FieldRef = Arc<NumberField>;

impl NumberField {
    /// A quintic field. `g` is made monic; it must be irreducible of degree 5.
    pub fn new(g: &UniPoly) -> Result<FieldRef> {
        if g.degree() != Some(5) {
            return Err(Error::Usage(format!("{g} does not have degree 5")));
        }
        let g = g.monic();
        if !factor_over_q(&g)?.is_irreducible() {
            return Err(Error::Usage(format!("{g} is reducible over Q")));
        }
        let embeddings = complex_roots_adaptive(&g, DEFAULT_PRECISION_BITS, 4 * DEFAULT_PRECISION_BITS)?;
        Ok(Arc::new(NumberField { modulus: g, embeddings, is_field: true }))
    }

    /// `Q[x]/(g)` without any irreducibility check and without embeddings.
    pub fn quotient_ring(g: &UniPoly) -> Result<FieldRef> {
        match g.degree() {
            Some(d) if d >= 1 => {}
            _ => return Err(Error::Usage("quotient by a constant polynomial".into())),
        }
        Ok(Arc::new(NumberField { modulus: g.monic(), embeddings: Vec::new(), is_field: false }))
    }

    pub fn defining_poly(&self) -> &UniPoly {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap()
    }

    pub fn is_field(&self) -> bool {
        self.is_field
    }

    /// Root balls of the defining polynomial in canonical order.
    pub fn embeddings(&self) -> &[ComplexBall] {
        &self.embeddings
    }

    pub fn element(self: &Arc<Self>, coords: Vec<Rational>) -> Result<FieldElement> {
        if coords.len() > self.degree() {
            return Err(Error::Usage(format!("{} coordinates for a degree-{} algebra", coords.len(), self.degree())));
        }
        Ok(FieldElement::from_poly(self, &UniPoly::new(coords)))
    }

    pub fn from_rational(self: &Arc<Self>, q: Rational) -> FieldElement {
        FieldElement::from_poly(self, &UniPoly::constant(q))
    }

    /// The class of `x`.
    pub fn alpha(self: &Arc<Self>) -> FieldElement {
        FieldElement::from_poly(self, &UniPoly::x())
    }

    fn same(&self, other: &NumberField) -> bool {
        std::ptr::eq(self, other) || self.modulus == other.modulus
    }
}

#[derive(Clone, Debug)]
pub struct FieldElement {
    field: FieldRef,
    /// Exactly `degree` coordinates in the power basis.
    coords: Vec<Rational>,
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.field.same(&other.field) && self.coords == other.coords
    }
}

impl Eq for FieldElement {}

impl FieldElement {
    pub fn from_poly(field: &FieldRef, p: &UniPoly) -> Self {
        let r = p.rem(&field.modulus).expect("modulus is nonzero");
        let n = field.degree();
        let coords = (0..n).map(|i| r.coeff(i)).collect();
        FieldElement { field: field.clone(), coords }
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn to_poly(&self) -> UniPoly {
        UniPoly::new(self.coords.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// True when the element lies in Q.
    pub fn is_rational(&self) -> bool {
        self.coords.iter().skip(1).all(Zero::is_zero)
    }

    fn check(&self, other: &FieldElement) -> Result<()> {
        if self.field.same(&other.field) {
            Ok(())
        } else {
            Err(Error::Usage("elements of different fields".into()))
        }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        Ok(FieldElement { field: self.field.clone(), coords })
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect();
        Ok(FieldElement { field: self.field.clone(), coords })
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(FieldElement::from_poly(&self.field, &(&self.to_poly() * &other.to_poly())))
    }

    pub fn neg(&self) -> FieldElement {
        FieldElement { field: self.field.clone(), coords: self.coords.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, s: &Rational) -> FieldElement {
        FieldElement { field: self.field.clone(), coords: self.coords.iter().map(|c| c * s).collect() }
    }

    pub fn pow(&self, k: u32) -> FieldElement {
        let mut acc = self.field.from_rational(Rational::one());
        for _ in 0..k {
            acc = acc.mul(self).expect("same field");
        }
        acc
    }

    /// `p(self)` by Horner's rule.
    pub fn eval_poly(&self, p: &UniPoly) -> FieldElement {
        let mut acc = UniPoly::zero();
        let me = self.to_poly();
        for c in p.coeffs().iter().rev() {
            acc = (&(&acc * &me) + &UniPoly::constant(c.clone())).rem(&self.field.modulus).expect("nonzero modulus");
        }
        FieldElement::from_poly(&self.field, &acc)
    }

    /// Column `j` holds the coordinates of `self * alpha^j`.
    pub fn multiplication_matrix(&self) -> Vec<Vec<Rational>> {
        let n = self.field.degree();
        let mut cols = Vec::with_capacity(n);
        let mut cur = self.to_poly();
        for _ in 0..n {
            let e = FieldElement::from_poly(&self.field, &cur);
            cur = &e.to_poly() * &UniPoly::x();
            cols.push(e.coords);
        }
        (0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect()
    }

    /// Characteristic polynomial of multiplication by `self` (Faddeev-LeVerrier).
    pub fn char_poly(&self) -> UniPoly {
        char_poly_of_matrix(&self.multiplication_matrix())
    }

    pub fn trace(&self) -> Rational {
        let n = self.field.degree();
        -self.char_poly().coeff(n - 1)
    }

    pub fn norm(&self) -> Rational {
        let n = self.field.degree();
        let c0 = self.char_poly().coeff(0);
        if n % 2 == 1 {
            -c0
        } else {
            c0
        }
    }

    /// Values under the cached complex embeddings, at `bits` fixed-point precision.
    pub fn embed(&self, bits: u32) -> Vec<FixedComplex> {
        let poly: Vec<FixedComplex> =
            self.coords.iter().map(|c| FixedComplex::from_rational(c, bits)).collect();
        self.field
            .embeddings
            .iter()
            .map(|ball| {
                let z = ball.center(bits);
                let mut acc = FixedComplex::zero(bits);
                for c in poly.iter().rev() {
                    acc = &(&acc * &z) + c;
                }
                acc
            })
            .collect()
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.to_poly().to_string().replace('x', "alpha");
        write!(f, "{s}")
    }
}

impl Serialize for FieldElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.coords.len()))?;
        for c in &self.coords {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

/// `det(x I - A)` by the Faddeev-LeVerrier recursion.
pub fn char_poly_of_matrix(a: &[Vec<Rational>]) -> UniPoly {
    let n = a.len();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut m = vec![vec![Rational::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = matmul(a, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        let am = matmul(a, &next);
        let tr: Rational = (0..n).map(|i| am[i][i].clone()).sum();
        coeffs[n - k] = -tr / Rational::from_integer(BigInt::from(k));
        m = next;
    }
    UniPoly::new(coeffs)
}

fn matmul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| &a[i][k] * &b[k][j]).sum()).collect())
        .collect()
}

/// Power sums `p_0, ..., p_{count-1}` of the roots of a monic polynomial.
pub fn power_sums(g: &UniPoly, count: usize) -> Vec<Rational> {
    let g = g.monic();
    let n = g.degree().unwrap_or(0);
    // a(i) is the coefficient of x^{n-i}
    let a = |i: usize| if i <= n { g.coeff(n - i) } else { Rational::zero() };
    let mut p: Vec<Rational> = Vec::with_capacity(count);
    for k in 0..count {
        if k == 0 {
            p.push(Rational::from_integer(BigInt::from(n)));
            continue;
        }
        let mut s = if k <= n { a(k) * Rational::from_integer(BigInt::from(k)) } else { Rational::zero() };
        for i in 1..k.min(n + 1) {
            s += a(i) * &p[k - i];
        }
        p.push(-s);
    }
    p
}

/// Characteristic polynomial of the generic element `y_0 + y_1 a + ... + y_{n-1} a^{n-1}`
/// with the coordinates `y_i` as indeterminates. Entry `k` is the coefficient of `x^k`.
pub fn generic_char_poly(g: &UniPoly) -> Vec<MPoly> {
    let n = g.degree().expect("nonzero modulus");
    let sums = power_sums(g, n * (n - 1) + 1);
    // beta^m written as a polynomial in alpha with MPoly coefficients
    let beta: Vec<MPoly> = (0..n).map(|i| MPoly::var(n, i)).collect();
    let mut power: Vec<MPoly> = vec![MPoly::one(n)];
    let mut traces: Vec<MPoly> = Vec::with_capacity(n + 1);
    traces.push(MPoly::constant(n, Rational::from_integer(BigInt::from(n))));
    for _ in 1..=n {
        let mut next = vec![MPoly::zero(n); power.len() + n - 1];
        for (i, p) in power.iter().enumerate() {
            for (j, b) in beta.iter().enumerate() {
                next[i + j] = &next[i + j] + &(p * b);
            }
        }
        power = next;
        let mut tr = MPoly::zero(n);
        for (j, c) in power.iter().enumerate() {
            tr = &tr + &c.scale(&sums[j]);
        }
        traces.push(tr);
    }
    // Newton: k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} p_i
    let mut e: Vec<MPoly> = vec![MPoly::one(n)];
    for k in 1..=n {
        let mut acc = MPoly::zero(n);
        for i in 1..=k {
            let term = &e[k - i] * &traces[i];
            acc = if i % 2 == 1 { &acc + &term } else { &acc - &term };
        }
        e.push(acc.scale(&Rational::new(BigInt::one(), BigInt::from(k))));
    }
    // x^n - e_1 x^{n-1} + e_2 x^{n-2} - ...
    (0..=n)
        .map(|k| {
            let i = n - k;
            if i.is_multiple_of(2) {
                e[i].clone()
            } else {
                -&e[i]
            }
        })
        .collect()
}

/// Outcome of [`has_root_in_field`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootSearch {
    /// An element with `f(beta) = 0`, verified exactly.
    Certificate(FieldElement),
    /// No root exists; the reason names the exact criterion used.
    ProvenAbsent(String),
    Inconclusive { precision_bits: u32, denominator_bound: BigInt, reason: String },
}

/// Looks for `beta` in `K` with `f(beta) = 0`.
///
/// Roots of `f` are matched to the embeddings of `K` in every way that
/// respects complex conjugation; each matching determines the coordinates of
/// a candidate `beta` through a Vandermonde solve, which are then recovered
/// as rationals and checked exactly. Absence is claimed only from exact
/// obstructions: no irreducible factor of degree 1 or 5, a discriminant
/// square-class mismatch, or a different number of real roots.
pub fn has_root_in_field(f: &UniPoly, k: &FieldRef, precision_bits: u32, denominator_bound: &BigInt) -> Result<RootSearch> {
    let deg = match f.degree() {
        Some(d) if (1..=5).contains(&d) => d,
        _ => return Err(Error::Usage(format!("{f} must have degree between 1 and 5"))),
    };
    if !k.is_field() {
        return Err(Error::Usage("root search needs a number field with embeddings".into()));
    }
    let inconclusive = |reason: &str| RootSearch::Inconclusive {
        precision_bits,
        denominator_bound: denominator_bound.clone(),
        reason: reason.to_string(),
    };
    let fact = factor_over_q(f)?;
    if let Some((lin, _)) = fact.factors.iter().find(|(p, _)| p.degree() == Some(1)) {
        let beta = k.from_rational(-lin.coeff(0));
        return Ok(RootSearch::Certificate(beta));
    }
    let h = match fact.factors.iter().find(|(p, _)| p.degree() == Some(5)) {
        Some((h, _)) => h.clone(),
        None => return Ok(RootSearch::ProvenAbsent("no irreducible factor of degree 1 or 5".into())),
    };
    debug_assert_eq!(deg, 5);
    let g = k.defining_poly();
    let dh = discriminant(&h)?;
    let dg = discriminant(g)?;
    if square_class(&(&dh * &dg))? != BigInt::one() {
        return Ok(RootSearch::ProvenAbsent("discriminants differ in square class".into()));
    }
    let bits = precision_bits.max(64);
    let roots = match complex_roots_adaptive(&h, bits, 4 * bits) {
        Ok(r) => r,
        Err(Error::NeedPrecision { .. }) => return Ok(inconclusive("roots of f could not be isolated")),
        Err(e) => return Err(e),
    };
    let alphas: Vec<ComplexBall> = if k.embeddings[0].bits >= bits {
        k.embeddings.clone()
    } else {
        match complex_roots_adaptive(g, bits, 4 * bits) {
            Ok(r) => r,
            Err(Error::NeedPrecision { .. }) => return Ok(inconclusive("embeddings could not be isolated")),
            Err(e) => return Err(e),
        }
    };
    let real_count = |v: &[ComplexBall]| v.iter().filter(|b| b.is_real()).count();
    if real_count(&roots) != real_count(&alphas) {
        return Ok(RootSearch::ProvenAbsent("different numbers of real roots".into()));
    }
    let work = bits + 32;
    let vinv = match vandermonde_inverse(&alphas, work) {
        Some(v) => v,
        None => return Ok(inconclusive("singular Vandermonde system")),
    };
    let targets: Vec<FixedComplex> = roots.iter().map(|b| b.center(work)).collect();
    let radius = Rational::new(BigInt::one(), BigInt::one() << (bits / 2));
    for perm in conjugation_matchings(&alphas, &roots) {
        let rhs: Vec<&FixedComplex> = perm.iter().map(|&j| &targets[j]).collect();
        let mut coords = Vec::with_capacity(5);
        for row in &vinv {
            let mut acc = FixedComplex::zero(work);
            for (v, r) in row.iter().zip(&rhs) {
                acc = &acc + &(v * *r);
            }
            let (re, im) = acc.to_rationals();
            let ball = ComplexBall { re, im, radius: radius.clone(), bits };
            match rational_reconstruct(&ball, denominator_bound) {
                Some(q) => coords.push(q),
                None => break,
            }
        }
        if coords.len() != 5 {
            continue;
        }
        let beta = k.element(coords)?;
        if beta.eval_poly(&h).is_zero() {
            debug_assert!(beta.eval_poly(f).is_zero());
            return Ok(RootSearch::Certificate(beta));
        }
    }
    Ok(inconclusive("no matching of roots to embeddings gave a verified element"))
}

/// Assignments `embedding i -> root perm[i]` sending real to real and
/// commuting with complex conjugation, in lexicographic order.
fn conjugation_matchings(alphas: &[ComplexBall], roots: &[ComplexBall]) -> Vec<Vec<usize>> {
    let n = alphas.len();
    // canonical order lists conjugate pairs adjacently after the real roots
    let partner = |v: &[ComplexBall], i: usize| -> usize {
        if v[i].is_real() {
            i
        } else {
            let first_pair = v.iter().filter(|b| b.is_real()).count();
            if (i - first_pair).is_multiple_of(2) {
                i + 1
            } else {
                i - 1
            }
        }
    };
    let mut out = Vec::new();
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(
        i: usize,
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
        alphas: &[ComplexBall],
        roots: &[ComplexBall],
        partner: &dyn Fn(&[ComplexBall], usize) -> usize,
    ) {
        let n = perm.len();
        if i == n {
            out.push(perm.clone());
            return;
        }
        if perm[i] != usize::MAX {
            rec(i + 1, perm, used, out, alphas, roots, partner);
            return;
        }
        for j in 0..n {
            if used[j] || alphas[i].is_real() != roots[j].is_real() {
                continue;
            }
            let (pi, pj) = (partner(alphas, i), partner(roots, j));
            perm[i] = j;
            used[j] = true;
            if pi != i {
                perm[pi] = pj;
                used[pj] = true;
            }
            rec(i + 1, perm, used, out, alphas, roots, partner);
            if pi != i {
                perm[pi] = usize::MAX;
                used[pj] = false;
            }
            perm[i] = usize::MAX;
            used[j] = false;
        }
    }
    rec(0, &mut perm, &mut used, &mut out, alphas, roots, &partner);
    out
}

/// Inverse of `V[i][k] = alpha_i^k` by Gauss-Jordan elimination with partial pivoting.
fn vandermonde_inverse(alphas: &[ComplexBall], bits: u32) -> Option<Vec<Vec<FixedComplex>>> {
    let n = alphas.len();
    let one = FixedComplex::from_rational(&Rational::one(), bits);
    let zero = FixedComplex::zero(bits);
    let mut m: Vec<Vec<FixedComplex>> = alphas
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let z = a.center(bits);
            let mut row = Vec::with_capacity(2 * n);
            let mut p = one.clone();
            for _ in 0..n {
                row.push(p.clone());
                p = &p * &z;
            }
            for j in 0..n {
                row.push(if i == j { one.clone() } else { zero.clone() });
            }
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).max_by(|&a, &b| m[a][col].abs_f64().total_cmp(&m[b][col].abs_f64()))?;
        if m[piv][col].is_zero() {
            return None;
        }
        m.swap(col, piv);
        let inv = one.div(&m[col][col])?;
        let pivot_row: Vec<FixedComplex> = m[col].iter().map(|x| x * &inv).collect();
        for (r, row) in m.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x = &*x - &(&factor * p);
            }
        }
        m[col] = pivot_row;
    }
    Some(m.into_iter().map(|row| row[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    fn pure18() -> FieldRef {
        NumberField::new(&UniPoly::from_i64(&[-18, 0, 0, 0, 0, 1])).unwrap()
    }

    fn t_field(t: Rational) -> FieldRef {
        NumberField::new(&UniPoly::new(vec![t.clone(), t, int(0), int(0), int(0), int(1)])).unwrap()
    }

    #[test]
    fn multiplication_and_reduction() {
        let k = pure18();
        let a = k.alpha();
        assert_eq!(a.mul(&a.pow(4)).unwrap(), k.from_rational(int(18)));
        let one = k.from_rational(int(1));
        let lhs = one.add(&a).unwrap().mul(&one.sub(&a).unwrap()).unwrap();
        assert_eq!(lhs, one.sub(&a.pow(2)).unwrap());
        let kt = t_field(rat(6, 5));
        let b = kt.alpha();
        assert_eq!(b.pow(5).coords(), &[rat(-6, 5), rat(-6, 5), int(0), int(0), int(0)]);
        assert!(a.mul(&b).is_err());
    }

    #[test]
    fn matrices_and_char_polys() {
        let k = pure18();
        let a = k.alpha();
        let id = k.from_rational(int(1)).multiplication_matrix();
        for (i, row) in id.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                assert_eq!(x, &if i == j { int(1) } else { int(0) });
            }
        }
        assert_eq!(a.char_poly(), *k.defining_poly());
        assert!(a.pow(2).trace().is_zero());
        let q = k.from_rational(rat(2, 3));
        assert_eq!(q.char_poly(), UniPoly::linear_root(&rat(2, 3)).pow(5));
        let beta = k.element(vec![int(1), int(2), int(0), int(-1), rat(1, 2)]).unwrap();
        assert!(beta.eval_poly(&beta.char_poly()).is_zero());
    }

    #[test]
    fn generic_char_poly_specializes() {
        let g = UniPoly::new(vec![rat(6, 5), rat(6, 5), int(0), int(0), int(0), int(1)]);
        let k = NumberField::new(&g).unwrap();
        let coeffs = generic_char_poly(&g);
        let point = [int(3), rat(-1, 2), int(2), int(5), rat(7, 3)];
        let beta = k.element(point.to_vec()).unwrap();
        let direct = beta.char_poly();
        for (i, c) in coeffs.iter().enumerate() {
            assert_eq!(c.eval(&point), direct.coeff(i), "coefficient {i}");
        }
    }

    #[test]
    fn power_sums_of_pure_quintic() {
        let p = power_sums(&UniPoly::from_i64(&[-18, 0, 0, 0, 0, 1]), 11);
        assert_eq!(p[0], int(5));
        assert!(p[1..5].iter().all(Zero::is_zero));
        assert_eq!(p[5], int(90));
        assert_eq!(p[10], int(5 * 324));
    }

    #[test]
    fn certificates_in_pure_field() {
        let k = pure18();
        let bound = BigInt::from(1_000_000_000_000i64);
        let f = UniPoly::from_i64(&[-324, 0, 0, 0, 0, 1]);
        match has_root_in_field(&f, &k, 512, &bound).unwrap() {
            RootSearch::Certificate(b) => assert_eq!(b.pow(5), k.from_rational(int(324))),
            other => panic!("{other:?}"),
        }
        match has_root_in_field(k.defining_poly(), &k, 512, &bound).unwrap() {
            RootSearch::Certificate(b) => assert!(b.eval_poly(k.defining_poly()).is_zero()),
            other => panic!("{other:?}"),
        }
        // x^5 - 2 generates a different field
        let absent = has_root_in_field(&UniPoly::from_i64(&[-2, 0, 0, 0, 0, 1]), &k, 256, &bound).unwrap();
        assert!(!matches!(absent, RootSearch::Certificate(_)));
        let quad = has_root_in_field(&UniPoly::from_i64(&[-2, 0, 1]), &k, 256, &bound).unwrap();
        assert!(matches!(quad, RootSearch::ProvenAbsent(_)));
    }

    #[test]
    fn rejects_bad_moduli() {
        assert!(NumberField::new(&UniPoly::from_i64(&[1, 0, 0, 0, 0, 1])).is_err());
        assert!(NumberField::new(&UniPoly::from_i64(&[1, 0, 1])).is_err());
        assert!(NumberField::quotient_ring(&UniPoly::from_i64(&[1, 0, 0, 0, 0, 1])).is_ok());
    }
}
