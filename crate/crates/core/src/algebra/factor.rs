//! Factorization over Q: squarefree decomposition, factorization modulo a
//! good prime, Hensel lifting, and recombination by subset search.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::integer::primes_up_to;
use super::modp::{Fp, PolyP};
use super::poly::UniPoly;
use super::rational::Rational;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factorization {
    #[serde(with = "super::rational::serde_str")]
    pub unit: Rational,
    /// Monic irreducible factors with multiplicities, sorted by degree and then
    /// lexicographically by coefficients.
    pub factors: Vec<(UniPoly, usize)>,
}

impl Factorization {
    pub fn expand(&self) -> UniPoly {
        self.factors
            .iter()
            .fold(UniPoly::constant(self.unit.clone()), |acc, (f, m)| &acc * &f.pow(*m))
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    pub fn has_repeated_factor(&self) -> bool {
        self.factors.iter().any(|(_, m)| *m > 1)
    }

    pub fn has_linear_factor(&self) -> bool {
        self.factors.iter().any(|(f, _)| f.degree() == Some(1))
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self
            .factors
            .iter()
            .flat_map(|(f, m)| std::iter::repeat_n(f.degree().unwrap(), *m))
            .collect();
        d.sort_unstable();
        d
    }
}

pub fn factor_over_q(p: &UniPoly) -> Result<Factorization> {
    match p.degree() {
        Some(d) if d >= 1 => {}
        _ => return Err(Error::UndefinedInput("factorization of a constant polynomial".into())),
    }
    let mut factors = Vec::new();
    for (sqf, mult) in p.squarefree_decomposition() {
        for g in factor_squarefree(&sqf) {
            factors.push((g, mult));
        }
    }
    factors.sort_by(|(a, _), (b, _)| a.degree().cmp(&b.degree()).then_with(|| a.cmp_coeffs(b)));
    Ok(Factorization { unit: p.leading(), factors })
}

pub fn is_irreducible(p: &UniPoly) -> bool {
    factor_over_q(p).map(|f| f.is_irreducible()).unwrap_or(false)
}

/// Monic irreducible factors of a monic squarefree polynomial over Q.
fn factor_squarefree(f: &UniPoly) -> Vec<UniPoly> {
    let n = f.degree().unwrap();
    if n == 1 {
        return vec![f.monic()];
    }
    let (_, prim) = f.primitive_integer_part();
    let lc = prim.last().unwrap().clone();

    let Some((fp, modular)) = choose_prime(&prim) else {
        unreachable!("a squarefree integer polynomial is squarefree modulo all but finitely many primes")
    };
    if modular.len() == 1 {
        return vec![f.monic()];
    }

    let bound = coefficient_bound(&prim);
    let p = BigInt::from(fp.p);
    let mut modulus = p.clone();
    let mut k = 1u32;
    while modulus <= bound {
        modulus *= &p;
        k += 1;
    }
    let lifted = hensel_lift_all(&prim, &modular, fp, k);
    recombine(prim, lc, lifted, &modulus)
        .into_iter()
        .map(|g| UniPoly::from_integers(&g).monic())
        .collect()
}

// Among the first few good primes, take the one with the fewest modular factors.
fn choose_prime(f: &[BigInt]) -> Option<(Fp, Vec<PolyP>)> {
    let lc = f.last().unwrap();
    let mut best: Option<(Fp, Vec<PolyP>)> = None;
    let mut tried = 0;
    for p in primes_up_to(10_000).into_iter().skip(1) {
        let fp = Fp::new(p);
        if (lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let red = fp.reduce(f);
        if !fp.is_squarefree(&red) {
            continue;
        }
        let facs = fp.factor_squarefree(&fp.monic(&red));
        if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
            best = Some((fp, facs));
        }
        tried += 1;
        if tried == 5 || best.as_ref().is_some_and(|(_, b)| b.len() == 1) {
            break;
        }
    }
    best
}

// 2 * |lc| * 2^n * ||f||_2 bounds twice the coefficients of lc * (any factor).
fn coefficient_bound(f: &[BigInt]) -> BigInt {
    let n = f.len() - 1;
    let norm2: BigInt = f.iter().map(|c| c * c).sum();
    let norm = norm2.sqrt() + 1u32;
    let lc = f.last().unwrap().abs();
    BigInt::from(2) * lc * (BigInt::one() << n) * norm
}

fn sym_mod(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

// Integer polynomial helpers, coefficients ascending.
fn zmul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut v = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            v[i + j] += x * y;
        }
    }
    v
}

fn zmod(a: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    a.iter().map(|c| c.mod_floor(m)).collect()
}

fn to_z(a: &[u64]) -> Vec<BigInt> {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

/// Lifts `f = g * h (mod p)` with `g` monic to a factorization modulo `p^k`.
fn hensel_lift_pair(f: &[BigInt], g0: &PolyP, h0: &PolyP, fp: Fp, k: u32) -> (Vec<BigInt>, Vec<BigInt>) {
    let (one, s, t) = fp.ext_gcd(g0, h0);
    debug_assert_eq!(one, vec![1]);
    let p = BigInt::from(fp.p);
    let mut g = to_z(g0);
    let mut h = to_z(h0);
    let mut m = p.clone();
    for _ in 1..k {
        let next = &m * &p;
        let gh = zmul(&g, &h);
        let len = f.len().max(gh.len());
        let err: Vec<BigInt> = (0..len)
            .map(|i| {
                let fi = f.get(i).cloned().unwrap_or_default();
                let gi = gh.get(i).cloned().unwrap_or_default();
                (fi - gi).mod_floor(&next) / &m
            })
            .collect();
        let e: PolyP = {
            let mut v: PolyP = err.iter().map(|c| fp.reduce_int(c)).collect();
            super::modp::trim(&mut v);
            v
        };
        // g*dh + h*dg = e (mod p), deg dg < deg g
        let (q, dg) = fp.div_rem(&fp.mul(&t, &e), g0);
        let dh = fp.add(&fp.mul(&s, &e), &fp.mul(&q, h0));
        g = add_scaled(&g, &dg, &m, &next);
        h = add_scaled(&h, &dh, &m, &next);
        m = next;
    }
    (g, h)
}

fn add_scaled(a: &[BigInt], d: &[u64], m: &BigInt, modulus: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(d.len());
    let mut v: Vec<BigInt> = (0..n)
        .map(|i| {
            let ai = a.get(i).cloned().unwrap_or_default();
            let di = BigInt::from(d.get(i).copied().unwrap_or(0));
            (ai + di * m).mod_floor(modulus)
        })
        .collect();
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

/// Lifts all modular factors (monic, over F_p) of `f` to monic factors mod `p^k`.
fn hensel_lift_all(f: &[BigInt], factors: &[PolyP], fp: Fp, k: u32) -> Vec<Vec<BigInt>> {
    let modulus = num_traits::pow(BigInt::from(fp.p), k as usize);
    let mut out = Vec::with_capacity(factors.len());
    let mut current = zmod(f, &modulus);
    for i in 0..factors.len() - 1 {
        let g0 = &factors[i];
        let lc = fp.reduce_int(current.last().unwrap());
        let h0 = factors[i + 1..]
            .iter()
            .fold(vec![lc], |acc, x| fp.mul(&acc, x));
        let (g, h) = hensel_lift_pair(&current, g0, &h0, fp, k);
        out.push(g);
        current = h;
    }
    // the last cofactor carries the leading coefficient; make it monic mod p^k
    let lc = current.last().unwrap().clone();
    let inv = super::integer::mod_inverse(&lc, &modulus).expect("lc is a unit mod p");
    out.push(current.iter().map(|c| (c * &inv).mod_floor(&modulus)).collect());
    out
}

// Exact division of integer polynomials; `None` unless `d` divides `a` over Z.
fn zdiv_exact(a: &[BigInt], d: &[BigInt]) -> Option<Vec<BigInt>> {
    let dl = d.last()?;
    if a.len() < d.len() {
        return None;
    }
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - d.len() + 1];
    for k in (0..q.len()).rev() {
        let (c, rem) = r[k + d.len() - 1].div_rem(dl);
        if !rem.is_zero() {
            return None;
        }
        for (j, dj) in d.iter().enumerate() {
            r[k + j] -= &c * dj;
        }
        q[k] = c;
    }
    r.iter().all(|c| c.is_zero()).then_some(q)
}

fn primitive(a: Vec<BigInt>) -> Vec<BigInt> {
    let mut g = a.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if a.last().is_some_and(|c| c.is_negative()) {
        g = -g;
    }
    if g.is_zero() {
        return a;
    }
    a.into_iter().map(|c| c / &g).collect()
}

/// Zassenhaus recombination over subsets of increasing size.
fn recombine(mut f: Vec<BigInt>, mut lc: BigInt, mut lifted: Vec<Vec<BigInt>>, modulus: &BigInt) -> Vec<Vec<BigInt>> {
    let mut found = Vec::new();
    let mut size = 1;
    'outer: while 2 * size <= lifted.len() {
        let r = lifted.len();
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let cand = idx.iter().fold(vec![lc.clone()], |acc, &i| {
                zmul(&acc, &lifted[i]).iter().map(|c| c.mod_floor(modulus)).collect()
            });
            let cand = primitive(cand.iter().map(|c| sym_mod(c, modulus)).collect());
            if let Some(q) = zdiv_exact(&f, &cand) {
                found.push(cand);
                f = primitive(q);
                lc = f.last().unwrap().clone();
                for &i in idx.iter().rev() {
                    lifted.remove(i);
                }
                continue 'outer;
            }
            // next combination
            let mut i = size;
            loop {
                if i == 0 {
                    size += 1;
                    continue 'outer;
                }
                i -= 1;
                if idx[i] < r - size + i {
                    break;
                }
            }
            idx[i] += 1;
            for j in i + 1..size {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    if f.len() > 1 {
        found.push(f);
    }
    found
}

/// Cycle type of the Frobenius at `p`: degrees of the irreducible factors of
/// `f mod p`, descending. `None` when `p` divides the leading coefficient or
/// `f mod p` is not squarefree.
pub fn cycle_type_mod_p(f: &[BigInt], p: u64) -> Option<Vec<usize>> {
    let fp = Fp::new(p);
    let lc = f.last()?;
    if (lc % BigInt::from(p)).is_zero() {
        return None;
    }
    let red = fp.reduce(f);
    if !fp.is_squarefree(&red) {
        return None;
    }
    Some(fp.factor_degrees(&fp.monic(&red)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    fn poly(c: &[i64]) -> UniPoly {
        UniPoly::from_i64(c)
    }

    #[test]
    fn cyclotomic_split_of_x5_plus_1() {
        let f = factor_over_q(&poly(&[1, 0, 0, 0, 0, 1])).unwrap();
        assert_eq!(f.factors, vec![(poly(&[1, 1]), 1), (poly(&[1, -1, 1, -1, 1]), 1)]);
        assert_eq!(f.unit, int(1));
    }

    #[test]
    fn x10_minus_1_is_four_cyclotomics() {
        let f = factor_over_q(&poly(&[-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1])).unwrap();
        assert_eq!(
            f.factors,
            vec![
                (poly(&[-1, 1]), 1),
                (poly(&[1, 1]), 1),
                (poly(&[1, -1, 1, -1, 1]), 1),
                (poly(&[1, 1, 1, 1, 1]), 1),
            ]
        );
    }

    #[test]
    fn irreducible_quintics() {
        assert!(factor_over_q(&poly(&[12, -5, 0, 0, 0, 1])).unwrap().is_irreducible());
        assert!(factor_over_q(&poly(&[-18, 0, 0, 0, 0, 1])).unwrap().is_irreducible());
        // x^5 + x + 1 = (x^2 + x + 1)(x^3 - x^2 + 1)
        let f = factor_over_q(&poly(&[1, 1, 0, 0, 0, 1])).unwrap();
        assert_eq!(f.factors, vec![(poly(&[1, 1, 1]), 1), (poly(&[1, 0, -1, 1]), 1)]);
    }

    #[test]
    fn rational_coefficients_and_multiplicity() {
        // 3 (x - 1/2)^2 (x^2 + 2)
        let g = &poly(&[2, 0, 1]) * &UniPoly::linear_root(&rat(1, 2)).pow(2);
        let p = g.scale(&int(3));
        let f = factor_over_q(&p).unwrap();
        assert_eq!(f.unit, int(3));
        assert_eq!(f.factors, vec![(UniPoly::linear_root(&rat(1, 2)), 2), (poly(&[2, 0, 1]), 1)]);
        assert_eq!(f.expand(), p);
        assert!(f.has_repeated_factor());
    }

    #[test]
    fn swinnerton_dyer_like_many_modular_factors() {
        // x^4 - 10x^2 + 1 is irreducible but splits into quadratics/linears mod every prime
        let f = factor_over_q(&poly(&[1, 0, -10, 0, 1])).unwrap();
        assert!(f.is_irreducible());
        // (x^4 - 10x^2 + 1)(x^4 + 1) mixes two such factors
        let p = &poly(&[1, 0, -10, 0, 1]) * &poly(&[1, 0, 0, 0, 1]);
        let f = factor_over_q(&p).unwrap();
        assert_eq!(f.factors.len(), 2);
        assert_eq!(f.expand(), p);
    }

    #[test]
    fn degree_ten_field_polynomial() {
        let f = poly(&[-1, 4, -4, 0, 0, -11, -3, 0, 0, 0, 1]);
        let fac = factor_over_q(&f).unwrap();
        assert_eq!(fac.expand(), f);
    }

    #[test]
    fn constant_is_rejected() {
        assert!(factor_over_q(&poly(&[5])).is_err());
    }

    #[test]
    fn cycle_types() {
        let f: Vec<BigInt> = [-18, 0, 0, 0, 0, 1].iter().map(|&c| BigInt::from(c)).collect();
        // mod 11 every element is a fifth power residue class issue: x^5 = 18 = 7
        assert!(cycle_type_mod_p(&f, 2).is_none());
        assert!(cycle_type_mod_p(&f, 5).is_none());
        let ct = cycle_type_mod_p(&f, 7).unwrap();
        assert_eq!(ct.iter().sum::<usize>(), 5);
    }
}
