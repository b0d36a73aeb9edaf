//! Exhaustive search for primitive integer points of bounded height.
//!
//! Three of the four coordinates are enumerated over a box; the fourth is
//! solved from the quadric exactly (a perfect-square discriminant test when
//! the quadric is quadratic in it, a divisibility test when linear), and the
//! cubic filters the candidates. Arithmetic is in `i128` when the
//! coefficient and height bounds allow it, otherwise in big integers.

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;

use super::{CurveCK, CurvePoint};
use crate::error::{Error, Result};

/// Inclusive ranges for the three enumerated coordinates, in the order of
/// the curve's search coordinates with the solved one removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchBox {
    pub ranges: [(i64, i64); 3],
}

impl SearchBox {
    pub fn full(h: i64) -> Self {
        SearchBox { ranges: [(-h, h); 3] }
    }

    /// Splits the first range into `parts` consecutive pieces.
    pub fn split(&self, parts: usize) -> Vec<SearchBox> {
        let (lo, hi) = self.ranges[0];
        let len = (hi - lo + 1).max(0) as usize;
        let parts = parts.clamp(1, len.max(1));
        (0..parts)
            .map(|k| {
                let a = lo + (len * k / parts) as i64;
                let b = lo + (len * (k + 1) / parts) as i64 - 1;
                let mut r = self.ranges;
                r[0] = (a, b);
                SearchBox { ranges: r }
            })
            .filter(|b| b.ranges[0].0 <= b.ranges[0].1)
            .collect()
    }
}

trait Num: Clone + Integer + Signed + Roots + ToPrimitive + From<i64> + Send + Sync {}
impl<T: Clone + Integer + Signed + Roots + ToPrimitive + From<i64> + Send + Sync> Num for T {}

struct Forms<T> {
    solve: usize,
    others: [usize; 3],
    a: T,
    b: [T; 3],
    /// `q[j][k]` for `j <= k`, coefficient of `o_j o_k`.
    q: [[T; 3]; 3],
    cubic: Vec<(T, [u32; 4])>,
}

struct Layout {
    solve: usize,
    others: [usize; 3],
}

fn layout(quad: &[(Vec<u32>, BigInt)]) -> Result<Layout> {
    let sq = |i: usize| quad.iter().any(|(e, _)| e[i] == 2);
    let lin = |i: usize| quad.iter().any(|(e, _)| e[i] == 1);
    let solve = (0..4)
        .find(|&i| sq(i))
        .or_else(|| (0..4).find(|&i| lin(i)))
        .ok_or_else(|| Error::Usage("the quadric is identically zero".into()))?;
    let o: Vec<usize> = (0..4).filter(|&i| i != solve).collect();
    Ok(Layout { solve, others: [o[0], o[1], o[2]] })
}

fn forms<T: Num>(l: &Layout, quad: &[(Vec<u32>, BigInt)], cubic: &[(Vec<u32>, BigInt)], conv: impl Fn(&BigInt) -> T) -> Forms<T> {
    let zero = || T::from(0);
    let mut a = zero();
    let mut b = [zero(), zero(), zero()];
    let mut q = [[zero(), zero(), zero()], [zero(), zero(), zero()], [zero(), zero(), zero()]];
    for (e, c) in quad {
        let c = conv(c);
        match e[l.solve] {
            2 => a = c,
            1 => {
                let j = (0..3).find(|&j| e[l.others[j]] == 1).expect("homogeneous quadric");
                b[j] = c;
            }
            _ => {
                let idx: Vec<usize> = (0..3).flat_map(|j| std::iter::repeat_n(j, e[l.others[j]] as usize)).collect();
                q[idx[0]][idx[1]] = c;
            }
        }
    }
    let cubic = cubic.iter().map(|(e, c)| (conv(c), [e[0], e[1], e[2], e[3]])).collect();
    Forms { solve: l.solve, others: l.others, a, b, q, cubic }
}

const SQUARE_MOD_64: [bool; 64] = {
    let mut t = [false; 64];
    let mut i = 0;
    while i < 64 {
        t[(i * i) % 64] = true;
        i += 1;
    }
    t
};

fn eval_cubic<T: Num>(cubic: &[(T, [u32; 4])], p: &[i64; 4]) -> T {
    let mut acc = T::from(0);
    for (c, e) in cubic {
        let mut term = c.clone();
        for (x, &k) in p.iter().zip(e) {
            for _ in 0..k {
                term = term * T::from(*x);
            }
        }
        acc = acc + term;
    }
    acc
}

fn accept<T: Num>(f: &Forms<T>, h: i64, o: [i64; 3], s: &T, out: &mut Vec<[i64; 4]>) {
    let s = match s.to_i64() {
        Some(s) if s.abs() <= h => s,
        _ => return,
    };
    let mut p = [0i64; 4];
    p[f.solve] = s;
    for j in 0..3 {
        p[f.others[j]] = o[j];
    }
    let first = match p.iter().find(|&&x| x != 0) {
        Some(&x) => x,
        None => return,
    };
    if first < 0 || p.iter().fold(0i64, |g, &x| g.gcd(&x)) != 1 {
        return;
    }
    if eval_cubic(&f.cubic, &p).is_zero() {
        out.push(p);
    }
}

fn scan<T: Num>(f: &Forms<T>, h: i64, bx: &SearchBox) -> Vec<[i64; 4]> {
    let clamp = |(lo, hi): (i64, i64)| (lo.max(-h), hi.min(h));
    let (r0, r1, r2) = (clamp(bx.ranges[0]), clamp(bx.ranges[1]), clamp(bx.ranges[2]));
    let two_a = T::from(2) * f.a.clone();
    let four_a = T::from(4) * f.a.clone();
    let sixty_four = T::from(64);
    let mut found: Vec<[i64; 4]> = (r0.0..=r0.1)
        .into_par_iter()
        .flat_map_iter(|u| {
            let mut out = Vec::new();
            let tu = T::from(u);
            for v in r1.0..=r1.1 {
                let tv = T::from(v);
                let bu = f.b[0].clone() * tu.clone() + f.b[1].clone() * tv.clone();
                let cu = f.q[0][0].clone() * tu.clone() * tu.clone()
                    + f.q[0][1].clone() * tu.clone() * tv.clone()
                    + f.q[1][1].clone() * tv.clone() * tv.clone();
                let cw = f.q[0][2].clone() * tu.clone() + f.q[1][2].clone() * tv.clone();
                for w in r2.0..=r2.1 {
                    let tw = T::from(w);
                    let bv = bu.clone() + f.b[2].clone() * tw.clone();
                    let cv = cu.clone() + (cw.clone() + f.q[2][2].clone() * tw.clone()) * tw.clone();
                    let o = [u, v, w];
                    if !f.a.is_zero() {
                        let d = bv.clone() * bv.clone() - four_a.clone() * cv;
                        if d.is_negative() {
                            continue;
                        }
                        let m = (d.clone() % sixty_four.clone()).to_usize().unwrap_or(0);
                        if !SQUARE_MOD_64[m] {
                            continue;
                        }
                        let r = d.sqrt();
                        if r.clone() * r.clone() != d {
                            continue;
                        }
                        for num in [r.clone() - bv.clone(), -r.clone() - bv.clone()] {
                            if (num.clone() % two_a.clone()).is_zero() {
                                accept(f, h, o, &(num / two_a.clone()), &mut out);
                            }
                            if r.is_zero() {
                                break;
                            }
                        }
                    } else if !bv.is_zero() {
                        if (cv.clone() % bv.clone()).is_zero() {
                            accept(f, h, o, &(-(cv / bv)), &mut out);
                        }
                    } else if cv.is_zero() {
                        for s in -h..=h {
                            accept(f, h, o, &T::from(s), &mut out);
                        }
                    }
                }
            }
            out
        })
        .collect();
    found.sort_by_key(|p| (p.iter().map(|x| x.abs()).max(), *p));
    found.dedup();
    found
}

/// Primitive normalized points inside `bx` (and of height at most `h`).
pub fn search_box(c: &CurveCK, h: i64, bx: &SearchBox) -> Result<Vec<CurvePoint>> {
    let (quad, cubic) = c.integer_forms();
    let l = layout(&quad)?;
    let max_bits = quad.iter().chain(&cubic).map(|(_, c)| c.bits()).max().unwrap_or(0);
    let hb = 64 - (h.unsigned_abs()).leading_zeros() as u64;
    // generous headroom: discriminants need ~2M + 2H + 6 bits, cubic terms ~M + 3H + 5
    let fits = 2 * max_bits + 2 * hb + 8 < 126 && max_bits + 3 * hb + 8 < 126;
    let raw = if fits {
        let f = forms::<i128>(&l, &quad, &cubic, |x| x.to_i128().expect("bounded coefficient"));
        scan(&f, h, bx)
    } else {
        let f = forms::<BigInt>(&l, &quad, &cubic, Clone::clone);
        scan(&f, h, bx)
    };
    Ok(raw.iter().map(|p| CurvePoint::from_i64(p)).collect())
}
