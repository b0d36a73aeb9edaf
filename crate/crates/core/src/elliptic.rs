//! Weierstrass curves over Q: invariants, quadratic twists and the group law.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::algebra::rational::{int, parse_rational, rational_sqrt, serde_str, square_class};
use crate::algebra::Rational;
use crate::error::{Error, Result};

/// `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6`, nonsingular.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeierstrassCurve {
    #[serde(with = "serde_str")]
    pub a1: Rational,
    #[serde(with = "serde_str")]
    pub a2: Rational,
    #[serde(with = "serde_str")]
    pub a3: Rational,
    #[serde(with = "serde_str")]
    pub a4: Rational,
    #[serde(with = "serde_str")]
    pub a6: Rational,
}

/// Standard invariants of a Weierstrass model.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Invariants {
    #[serde(with = "serde_str")]
    pub b2: Rational,
    #[serde(with = "serde_str")]
    pub b4: Rational,
    #[serde(with = "serde_str")]
    pub b6: Rational,
    #[serde(with = "serde_str")]
    pub b8: Rational,
    #[serde(with = "serde_str")]
    pub c4: Rational,
    #[serde(with = "serde_str")]
    pub c6: Rational,
    #[serde(with = "serde_str")]
    pub discriminant: Rational,
    #[serde(with = "serde_str")]
    pub j: Rational,
}

fn b_invariants(a1: &Rational, a2: &Rational, a3: &Rational, a4: &Rational, a6: &Rational) -> [Rational; 4] {
    let b2 = a1 * a1 + a2 * int(4);
    let b4 = a4 * int(2) + a1 * a3;
    let b6 = a3 * a3 + a6 * int(4);
    let b8 = a1 * a1 * a6 + a2 * a6 * int(4) - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    [b2, b4, b6, b8]
}

fn c_invariants(b: &[Rational; 4]) -> (Rational, Rational, Rational) {
    let [b2, b4, b6, b8] = b;
    let c4 = b2 * b2 - b4 * int(24);
    let c6 = -(b2 * b2 * b2) + b2 * b4 * int(36) - b6 * int(216);
    let disc = -(b2 * b2 * b8) - b4 * b4 * b4 * int(8) - b6 * b6 * int(27) + b2 * b4 * b6 * int(9);
    (c4, c6, disc)
}

impl WeierstrassCurve {
    pub fn new(a1: Rational, a2: Rational, a3: Rational, a4: Rational, a6: Rational) -> Result<Self> {
        let b = b_invariants(&a1, &a2, &a3, &a4, &a6);
        if c_invariants(&b).2.is_zero() {
            return Err(Error::Domain("singular Weierstrass equation (discriminant 0)".into()));
        }
        Ok(WeierstrassCurve { a1, a2, a3, a4, a6 })
    }

    /// `y^2 = x^3 + a x + b`.
    pub fn short(a: Rational, b: Rational) -> Result<Self> {
        Self::new(Rational::zero(), Rational::zero(), Rational::zero(), a, b)
    }

    /// Parses `"a4,a6"` or `"a1,a2,a3,a4,a6"`.
    pub fn parse(s: &str) -> Result<Self> {
        let parts: Vec<Rational> = s.split(',').map(|p| parse_rational(p.trim())).collect::<Result<_>>()?;
        match parts.as_slice() {
            [a4, a6] => Self::short(a4.clone(), a6.clone()),
            [a1, a2, a3, a4, a6] => Self::new(a1.clone(), a2.clone(), a3.clone(), a4.clone(), a6.clone()),
            _ => Err(Error::Parse { what: "Weierstrass coefficients (2 or 5)", input: s.to_string() }),
        }
    }

    pub fn coefficients(&self) -> [&Rational; 5] {
        [&self.a1, &self.a2, &self.a3, &self.a4, &self.a6]
    }

    pub fn invariants(&self) -> Invariants {
        let b = b_invariants(&self.a1, &self.a2, &self.a3, &self.a4, &self.a6);
        let (c4, c6, discriminant) = c_invariants(&b);
        let j = &c4 * &c4 * &c4 / &discriminant;
        let [b2, b4, b6, b8] = b;
        Invariants { b2, b4, b6, b8, c4, c6, discriminant, j }
    }

    pub fn c4(&self) -> Rational {
        self.invariants().c4
    }

    pub fn c6(&self) -> Rational {
        self.invariants().c6
    }

    pub fn discriminant(&self) -> Rational {
        self.invariants().discriminant
    }

    pub fn j_invariant(&self) -> Rational {
        self.invariants().j
    }

    /// The isomorphic model `y^2 = x^3 - 27 c4 x - 54 c6`.
    pub fn short_model(&self) -> WeierstrassCurve {
        let inv = self.invariants();
        WeierstrassCurve::short(-inv.c4 * int(27), -inv.c6 * int(54)).expect("isomorphic to a nonsingular curve")
    }

    /// The quadratic twist by `d`, as `y^2 = x^3 - 27 d^2 c4 x - 54 d^3 c6`.
    pub fn twist(&self, d: &Rational) -> Result<WeierstrassCurve> {
        if d.is_zero() {
            return Err(Error::UndefinedInput("twist by 0".into()));
        }
        let inv = self.invariants();
        let d2 = d * d;
        let d3 = &d2 * d;
        WeierstrassCurve::short(-inv.c4 * int(27) * d2, -inv.c6 * int(54) * d3)
    }

    /// True when the two models define isomorphic curves over Q:
    /// `c4' = u^4 c4` and `c6' = u^6 c6` for some rational `u`.
    pub fn is_isomorphic(&self, other: &WeierstrassCurve) -> bool {
        let (p, q) = (self.invariants(), other.invariants());
        match (p.c4.is_zero(), p.c6.is_zero()) {
            (true, _) if !q.c4.is_zero() => false,
            (_, true) if !q.c6.is_zero() => false,
            (true, true) => unreachable!("nonsingular"),
            (true, false) => {
                // u^6 = c6'/c6 and c4 = c4' = 0
                let r = &q.c6 / &p.c6;
                rational_sqrt(&r).map(|s| cube_root(&s).is_some()).unwrap_or(false)
            }
            (false, true) => {
                let r = &q.c4 / &p.c4;
                rational_sqrt(&r).and_then(|s| rational_sqrt(&s)).is_some()
            }
            (false, false) => {
                if q.c4.is_zero() || q.c6.is_zero() {
                    return false;
                }
                // u^2 = (c6'/c6) / (c4'/c4)
                let u2 = (&q.c6 / &p.c6) * (&p.c4 / &q.c4);
                let u4 = &u2 * &u2;
                u4 == &q.c4 / &p.c4 && rational_sqrt(&u2).is_some()
            }
        }
    }

    pub fn contains(&self, p: &EcPoint) -> bool {
        match p {
            EcPoint::Infinity => true,
            EcPoint::Affine { x, y } => {
                let lhs = y * y + &self.a1 * x * y + &self.a3 * y;
                let rhs = x * x * x + &self.a2 * x * x + &self.a4 * x + &self.a6;
                lhs == rhs
            }
        }
    }

    fn check(&self, p: &EcPoint) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::Usage(format!("point {p} is not on the curve")))
        }
    }

    pub fn neg(&self, p: &EcPoint) -> Result<EcPoint> {
        self.check(p)?;
        Ok(self.neg_unchecked(p))
    }

    fn neg_unchecked(&self, p: &EcPoint) -> EcPoint {
        match p {
            EcPoint::Infinity => EcPoint::Infinity,
            EcPoint::Affine { x, y } => EcPoint::Affine { x: x.clone(), y: -y - &self.a1 * x - &self.a3 },
        }
    }

    pub fn add(&self, p: &EcPoint, q: &EcPoint) -> Result<EcPoint> {
        self.check(p)?;
        self.check(q)?;
        Ok(self.add_unchecked(p, q))
    }

    fn add_unchecked(&self, p: &EcPoint, q: &EcPoint) -> EcPoint {
        let (x1, y1, x2, y2) = match (p, q) {
            (EcPoint::Infinity, _) => return q.clone(),
            (_, EcPoint::Infinity) => return p.clone(),
            (EcPoint::Affine { x: x1, y: y1 }, EcPoint::Affine { x: x2, y: y2 }) => (x1, y1, x2, y2),
        };
        if *q == self.neg_unchecked(p) {
            return EcPoint::Infinity;
        }
        let lambda = if x1 != x2 {
            (y2 - y1) / (x2 - x1)
        } else {
            (x1 * x1 * int(3) + &self.a2 * x1 * int(2) + &self.a4 - &self.a1 * y1)
                / (y1 * int(2) + &self.a1 * x1 + &self.a3)
        };
        let nu = y1 - &lambda * x1;
        let x3 = &lambda * &lambda + &self.a1 * &lambda - &self.a2 - x1 - x2;
        let y3 = -(&lambda + &self.a1) * &x3 - nu - &self.a3;
        EcPoint::Affine { x: x3, y: y3 }
    }

    /// `n P` by double-and-add; negative `n` uses `-P`.
    pub fn scalar_mul(&self, n: &BigInt, p: &EcPoint) -> Result<EcPoint> {
        self.check(p)?;
        let base = if n.is_negative() { self.neg_unchecked(p) } else { p.clone() };
        let mut k = n.abs();
        let mut acc = EcPoint::Infinity;
        let mut pow = base;
        while !k.is_zero() {
            if (&k & BigInt::one()).is_one() {
                acc = self.add_unchecked(&acc, &pow);
            }
            pow = self.add_unchecked(&pow, &pow);
            k >>= 1;
        }
        Ok(acc)
    }
}

fn cube_root(x: &Rational) -> Option<Rational> {
    let r = |n: &BigInt| -> Option<BigInt> {
        let c = n.cbrt();
        (&c * &c * &c == *n).then_some(c)
    };
    Some(Rational::new(r(x.numer())?, r(x.denom())?))
}

impl std::fmt::Display for WeierstrassCurve {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let term = |c: &Rational, mono: &str, first: bool| -> String {
            if c.is_zero() {
                return String::new();
            }
            let sign = match (c.is_negative(), first) {
                (true, true) => "-",
                (true, false) => " - ",
                (false, true) => "",
                (false, false) => " + ",
            };
            let mag = c.abs();
            if mono.is_empty() {
                format!("{sign}{mag}")
            } else if mag.is_one() {
                format!("{sign}{mono}")
            } else {
                format!("{sign}{mag}*{mono}")
            }
        };
        let lhs = format!("y^2{}{}", term(&self.a1, "x*y", false), term(&self.a3, "y", false));
        let rhs = format!(
            "x^3{}{}{}",
            term(&self.a2, "x^2", false),
            term(&self.a4, "x", false),
            term(&self.a6, "", false)
        );
        write!(f, "{lhs} = {rhs}")
    }
}

/// A point on a curve over Q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EcPoint {
    Infinity,
    Affine { x: Rational, y: Rational },
}

impl EcPoint {
    pub fn affine(x: Rational, y: Rational) -> Self {
        EcPoint::Affine { x, y }
    }

    pub fn from_i64(x: i64, y: i64) -> Self {
        EcPoint::Affine { x: int(x), y: int(y) }
    }
}

impl std::fmt::Display for EcPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EcPoint::Infinity => write!(f, "infinity"),
            EcPoint::Affine { x, y } => write!(f, "({x}, {y})"),
        }
    }
}

impl Serialize for EcPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            EcPoint::Infinity => s.serialize_str("infinity"),
            EcPoint::Affine { x, y } => [x.to_string(), y.to_string()].serialize(s),
        }
    }
}

/// Outcome of comparing two curves up to quadratic twist.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "relation", content = "d", rename_all = "kebab-case")]
pub enum TwistRelation {
    /// `E2` is isomorphic to the twist of `E1` by this squarefree integer.
    Twist(#[serde(serialize_with = "ser_bigint")] BigInt),
    NotTwists,
}

fn ser_bigint<S: serde::Serializer>(n: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&n.to_string())
}

/// The squarefree `d` with `E2` isomorphic to the `d`-twist of `E1`.
/// Requires `j != 0, 1728` when the j-invariants agree.
pub fn quadratic_twist_factor(e1: &WeierstrassCurve, e2: &WeierstrassCurve) -> Result<TwistRelation> {
    let (i1, i2) = (e1.invariants(), e2.invariants());
    if i1.j != i2.j {
        return Ok(TwistRelation::NotTwists);
    }
    if i1.j.is_zero() || i1.j == int(1728) {
        return Err(Error::UnsupportedJ(i1.j.to_string()));
    }
    let d = (&i2.c6 / &i1.c6) * (&i1.c4 / &i2.c4);
    let class = square_class(&d)?;
    let twisted = e1.twist(&Rational::from_integer(class.clone()))?;
    if twisted.is_isomorphic(e2) {
        Ok(TwistRelation::Twist(class))
    } else {
        Ok(TwistRelation::NotTwists)
    }
}

/// `E0: y^2 = x^3 - 675x - 79650`.
pub fn e0() -> WeierstrassCurve {
    WeierstrassCurve::short(int(-675), int(-79650)).expect("nonsingular")
}

/// `y^2 = x^3 - x^2 - 833x + 109537`, the twist of `E0` by -10.
pub fn e_twist() -> WeierstrassCurve {
    WeierstrassCurve::new(int(0), int(-1), int(0), int(-833), int(109537)).expect("nonsingular")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    #[test]
    fn invariants_of_e0_and_twist() {
        let i = e0().invariants();
        assert_eq!((i.c4.clone(), i.c6.clone()), (int(32400), int(68817600)));
        assert_eq!(i.discriminant, int(-2720977920000));
        assert_eq!(i.j, rat(-25, 2));
        let k = e_twist().invariants();
        assert_eq!((k.c4, k.c6, k.discriminant), (int(40000), int(-94400000), int(-5120000000000)));
        assert_eq!(k.j, rat(-25, 2));
        assert_eq!(WeierstrassCurve::short(int(1), int(0)).unwrap().j_invariant(), int(1728));
    }

    #[test]
    fn singular_rejected() {
        assert!(matches!(WeierstrassCurve::short(int(0), int(0)), Err(Error::Domain(_))));
        assert!(WeierstrassCurve::short(int(-3), int(2)).is_err());
    }

    #[test]
    fn twist_detection() {
        assert_eq!(quadratic_twist_factor(&e0(), &e0()).unwrap(), TwistRelation::Twist(BigInt::from(1)));
        assert_eq!(quadratic_twist_factor(&e0(), &e_twist()).unwrap(), TwistRelation::Twist(BigInt::from(-10)));
        let x3x = WeierstrassCurve::short(int(1), int(0)).unwrap();
        assert_eq!(quadratic_twist_factor(&e0(), &x3x).unwrap(), TwistRelation::NotTwists);
        assert!(matches!(quadratic_twist_factor(&x3x, &x3x), Err(Error::UnsupportedJ(_))));
        let t = e0().twist(&rat(7, 4)).unwrap();
        assert_eq!(quadratic_twist_factor(&e0(), &t).unwrap(), TwistRelation::Twist(BigInt::from(7)));
    }

    #[test]
    fn group_law_on_x3_plus_1() {
        let e = WeierstrassCurve::short(int(0), int(1)).unwrap();
        let p = EcPoint::from_i64(2, 3);
        let two = e.add(&p, &p).unwrap();
        assert_eq!(two, EcPoint::from_i64(0, 1));
        assert_eq!(e.scalar_mul(&BigInt::from(2), &p).unwrap(), two);
        assert_eq!(e.scalar_mul(&BigInt::from(3), &p).unwrap(), EcPoint::from_i64(-1, 0));
        assert_eq!(e.scalar_mul(&BigInt::from(6), &p).unwrap(), EcPoint::Infinity);
        let q = EcPoint::from_i64(0, 1);
        assert_eq!(e.add(&q, &q).unwrap(), EcPoint::from_i64(0, -1));
        assert_eq!(e.add(&p, &EcPoint::Infinity).unwrap(), p);
        assert_eq!(e.add(&p, &e.neg(&p).unwrap()).unwrap(), EcPoint::Infinity);
        assert!(e.add(&EcPoint::from_i64(1, 1), &p).is_err());
    }

    #[test]
    fn long_form_group_law() {
        // y^2 + y = x^3 - x with P = (0, 0) of infinite order
        let e = WeierstrassCurve::new(int(0), int(0), int(1), int(-1), int(0)).unwrap();
        let p = EcPoint::from_i64(0, 0);
        let expect = [
            EcPoint::from_i64(1, 0),
            EcPoint::from_i64(-1, -1),
            EcPoint::from_i64(2, -3),
            EcPoint::affine(rat(1, 4), rat(-5, 8)),
            EcPoint::from_i64(6, 14),
        ];
        let mut acc = p.clone();
        for (k, want) in expect.iter().enumerate() {
            acc = e.add(&acc, &p).unwrap();
            assert_eq!(&acc, want, "{}P", k + 2);
            assert_eq!(&e.scalar_mul(&BigInt::from(k + 2), &p).unwrap(), want);
        }
        assert_eq!(e.neg(&p).unwrap(), EcPoint::from_i64(0, -1));
        assert_eq!(e.scalar_mul(&BigInt::from(-2), &p).unwrap(), e.neg(&expect[0]).unwrap());
    }

    #[test]
    fn parse_and_display() {
        let e = WeierstrassCurve::parse("0,-1,0,-833,109537").unwrap();
        assert_eq!(e, e_twist());
        assert_eq!(e.to_string(), "y^2 = x^3 - x^2 - 833*x + 109537");
        assert_eq!(WeierstrassCurve::parse("-675,-79650").unwrap(), e0());
        assert!(WeierstrassCurve::parse("1,2,3").is_err());
    }
}
