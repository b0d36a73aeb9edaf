//! Polynomials over F_p for small primes (p < 2^31): distinct- and
//! equal-degree factorization, extended gcd for Hensel lifting.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

/// Ascending coefficients in `0..p`, trimmed.
pub(crate) type PolyP = Vec<u64>;

#[derive(Clone, Copy, Debug)]
pub(crate) struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        debug_assert!(p < (1 << 31));
        Fp { p }
    }

    fn mulm(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn inv(&self, a: u64) -> u64 {
        self.pow(a, self.p - 2)
    }

    fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mulm(r, a);
            }
            a = self.mulm(a, a);
            e >>= 1;
        }
        r
    }

    pub fn reduce_int(&self, c: &BigInt) -> u64 {
        c.mod_floor(&BigInt::from(self.p)).to_u64().unwrap()
    }

    pub fn reduce(&self, cs: &[BigInt]) -> PolyP {
        let mut v: PolyP = cs.iter().map(|c| self.reduce_int(c)).collect();
        trim(&mut v);
        v
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> PolyP {
        let n = a.len().max(b.len());
        let mut v: PolyP = (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % self.p)
            .collect();
        trim(&mut v);
        v
    }

    pub fn sub(&self, a: &[u64], b: &[u64]) -> PolyP {
        let n = a.len().max(b.len());
        let mut v: PolyP = (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + self.p - b.get(i).copied().unwrap_or(0)) % self.p)
            .collect();
        trim(&mut v);
        v
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> PolyP {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut v = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                v[i + j] = (v[i + j] + x * y) % self.p;
            }
        }
        trim(&mut v);
        v
    }

    pub fn scale(&self, a: &[u64], s: u64) -> PolyP {
        let mut v: PolyP = a.iter().map(|&x| self.mulm(x, s)).collect();
        trim(&mut v);
        v
    }

    pub fn monic(&self, a: &[u64]) -> PolyP {
        match a.last() {
            None => Vec::new(),
            Some(&lc) => self.scale(a, self.inv(lc)),
        }
    }

    /// Division with remainder; `b` nonzero.
    pub fn div_rem(&self, a: &[u64], b: &[u64]) -> (PolyP, PolyP) {
        assert!(!b.is_empty(), "division by zero polynomial mod p");
        if a.len() < b.len() {
            return (Vec::new(), a.to_vec());
        }
        let inv = self.inv(*b.last().unwrap());
        let db = b.len() - 1;
        let mut r = a.to_vec();
        let mut q = vec![0u64; a.len() - db];
        for k in (0..q.len()).rev() {
            let c = self.mulm(r[k + db], inv);
            if c == 0 {
                continue;
            }
            q[k] = c;
            for (j, &bj) in b.iter().enumerate() {
                r[k + j] = (r[k + j] + self.p - self.mulm(c, bj)) % self.p;
            }
        }
        r.truncate(db);
        trim(&mut r);
        trim(&mut q);
        (q, r)
    }

    pub fn rem(&self, a: &[u64], b: &[u64]) -> PolyP {
        self.div_rem(a, b).1
    }

    pub fn gcd(&self, a: &[u64], b: &[u64]) -> PolyP {
        let (mut a, mut b) = (a.to_vec(), b.to_vec());
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// `(g, s, t)` with `s a + t b = g` monic.
    pub fn ext_gcd(&self, a: &[u64], b: &[u64]) -> (PolyP, PolyP, PolyP) {
        let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
        let (mut s0, mut s1): (PolyP, PolyP) = (vec![1], Vec::new());
        let (mut t0, mut t1): (PolyP, PolyP) = (Vec::new(), vec![1]);
        while !r1.is_empty() {
            let (q, r) = self.div_rem(&r0, &r1);
            let s2 = self.sub(&s0, &self.mul(&q, &s1));
            let t2 = self.sub(&t0, &self.mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let inv = self.inv(*r0.last().expect("gcd of two zero polynomials"));
        (self.scale(&r0, inv), self.scale(&s0, inv), self.scale(&t0, inv))
    }

    pub fn derivative(&self, a: &[u64]) -> PolyP {
        let mut v: PolyP = a
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| self.mulm(c, i as u64 % self.p))
            .collect();
        trim(&mut v);
        v
    }

    /// `base^e mod m`, `e` an arbitrary big exponent.
    pub fn powmod(&self, base: &[u64], e: &BigUint, m: &[u64]) -> PolyP {
        let mut result: PolyP = self.rem(&[1], m);
        let b = self.rem(base, m);
        for i in (0..e.bits()).rev() {
            result = self.rem(&self.mul(&result, &result), m);
            if e.bit(i) {
                result = self.rem(&self.mul(&result, &b), m);
            }
        }
        result
    }

    pub fn is_squarefree(&self, f: &[u64]) -> bool {
        let d = self.derivative(f);
        !d.is_empty() && self.gcd(f, &d).len() == 1
    }

    /// Distinct-degree factorization of a monic squarefree polynomial:
    /// `(product of all irreducible factors of degree d, d)`.
    pub fn ddf(&self, f: &[u64]) -> Vec<(PolyP, usize)> {
        let mut out = Vec::new();
        let mut rest = self.monic(f);
        let x: PolyP = vec![0, 1];
        let pb = BigUint::from(self.p);
        let mut h = self.rem(&x, &rest);
        let mut d = 0;
        while rest.len() > 1 {
            d += 1;
            if 2 * d > rest.len() - 1 {
                let deg = rest.len() - 1;
                out.push((rest, deg));
                break;
            }
            h = self.powmod(&h, &pb, &rest);
            let g = self.gcd(&rest, &self.sub(&h, &x));
            if g.len() > 1 {
                rest = self.div_rem(&rest, &g).0;
                h = self.rem(&h, &rest);
                out.push((g, d));
            }
        }
        out
    }

    /// Equal-degree splitting of a monic squarefree product of degree-`d`
    /// irreducibles. Trial polynomials are enumerated deterministically.
    pub fn edf(&self, f: &[u64], d: usize) -> Vec<PolyP> {
        let n = f.len() - 1;
        if n == d {
            return vec![f.to_vec()];
        }
        let exp = if self.p == 2 {
            BigUint::zero()
        } else {
            (num_traits::pow(BigUint::from(self.p), d) - 1u32) / 2u32
        };
        let mut counter: u64 = 1;
        loop {
            let a = self.trial_poly(counter, n);
            counter += 1;
            let b = if self.p == 2 {
                // trace map a + a^2 + ... + a^(2^(d-1))
                let mut acc = self.rem(&a, f);
                let mut cur = acc.clone();
                for _ in 1..d {
                    cur = self.rem(&self.mul(&cur, &cur), f);
                    acc = self.add(&acc, &cur);
                }
                acc
            } else {
                self.sub(&self.powmod(&a, &exp, f), &[1])
            };
            let g = self.gcd(f, &b);
            if g.len() > 1 && g.len() < f.len() {
                let h = self.div_rem(f, &g).0;
                let mut out = self.edf(&g, d);
                out.extend(self.edf(&self.monic(&h), d));
                return out;
            }
        }
    }

    // Enumerates nonconstant polynomials of degree < n by reading `k` in base p.
    fn trial_poly(&self, k: u64, n: usize) -> PolyP {
        let mut v = Vec::new();
        let mut k = k + self.p;
        while k > 0 && v.len() < n {
            v.push(k % self.p);
            k /= self.p;
        }
        trim(&mut v);
        v
    }

    /// Monic irreducible factors of a squarefree polynomial, sorted.
    pub fn factor_squarefree(&self, f: &[u64]) -> Vec<PolyP> {
        let mut out = Vec::new();
        for (g, d) in self.ddf(f) {
            out.extend(self.edf(&g, d));
        }
        out.sort();
        out
    }

    /// Degrees of the irreducible factors of a squarefree polynomial, descending.
    pub fn factor_degrees(&self, f: &[u64]) -> Vec<usize> {
        let mut degs = Vec::new();
        for (g, d) in self.ddf(f) {
            let count = (g.len() - 1) / d;
            degs.extend(std::iter::repeat_n(d, count));
        }
        degs.sort_unstable_by(|a, b| b.cmp(a));
        degs
    }
}

pub(crate) fn trim(v: &mut PolyP) {
    while v.last() == Some(&0) {
        v.pop();
    }
}
