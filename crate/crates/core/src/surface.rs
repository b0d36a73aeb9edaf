//! The sextic surface `X` in `(a : b : c : d)` obtained by eliminating `t`
//! from the two t-form curve equations. A point of `X` gives a field
//! `Q[x]/(x^5 + t x + t)` containing a second trinomial root
//! `a + b alpha + c alpha^2 + d alpha^3 + e alpha^4` with `e = 5a / 4t`.

use serde::Serialize;

use crate::algebra::rational::{int, rat};
use crate::algebra::{MPoly, Rational};
use crate::curve::{curve_from_t, CurvePoint};
use crate::error::{Error, Result};
use num_traits::Zero;

/// Points of `X` use the same primitive normalized representation as curve points.
pub type SurfacePoint = CurvePoint;

/// `(coefficient, [deg_a, deg_b, deg_c, deg_d])`.
const X_TERMS: [(i64, [u32; 4]); 30] = [
    (20, [3, 0, 1, 2]),
    (15, [3, 0, 0, 3]),
    (128, [2, 2, 0, 2]),
    (128, [2, 1, 2, 1]),
    (240, [2, 1, 1, 2]),
    (-100, [2, 1, 0, 3]),
    (32, [2, 0, 4, 0]),
    (320, [2, 0, 3, 1]),
    (700, [2, 0, 2, 2]),
    (250, [2, 0, 1, 3]),
    (-128, [1, 3, 1, 1]),
    (-480, [1, 3, 0, 2]),
    (-64, [1, 2, 3, 0]),
    (-720, [1, 2, 2, 1]),
    (-600, [1, 2, 1, 2]),
    (-500, [1, 2, 0, 3]),
    (-160, [1, 1, 4, 0]),
    (-600, [1, 1, 3, 1]),
    (-1500, [1, 1, 2, 2]),
    (-2500, [1, 1, 1, 3]),
    (400, [1, 0, 5, 0]),
    (2000, [1, 0, 4, 1]),
    (2500, [1, 0, 3, 2]),
    (1280, [0, 4, 1, 1]),
    (1600, [0, 4, 0, 2]),
    (640, [0, 3, 3, 0]),
    (4000, [0, 3, 2, 1]),
    (2000, [0, 3, 1, 2]),
    (800, [0, 2, 4, 0]),
    (2000, [0, 2, 3, 1]),
];

/// The defining sextic form of `X` in four variables `(a, b, c, d)`.
pub fn surface_form() -> MPoly {
    MPoly::from_terms(4, X_TERMS.iter().map(|(c, e)| (e.to_vec(), int(*c))))
}

fn eval_form(p: &[Rational]) -> Rational {
    let mut acc = Rational::zero();
    for (c, e) in X_TERMS.iter() {
        let mut term = int(*c);
        for (x, &k) in p.iter().zip(e) {
            for _ in 0..k {
                term *= x;
            }
        }
        acc += term;
    }
    acc
}

/// Evaluates the form at rational coordinates.
pub fn form_value(p: &[Rational]) -> Result<Rational> {
    if p.len() != 4 {
        return Err(Error::Usage(format!("expected 4 coordinates, got {}", p.len())));
    }
    Ok(eval_form(p))
}

pub fn on_surface(p: &SurfacePoint) -> bool {
    p.coords.len() == 4 && eval_form(&p.as_rationals()).is_zero()
}

/// Value of `t = (5a^2 - 50ab) / (32bd + 16c^2 + 40cd)` at a point of `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RecoveredT {
    Finite(Rational),
    /// Denominator zero, numerator nonzero.
    Infinity,
    /// Numerator and denominator both zero.
    Indeterminate,
}

impl Serialize for RecoveredT {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            RecoveredT::Finite(t) => s.serialize_str(&t.to_string()),
            RecoveredT::Infinity => s.serialize_str("infinity"),
            RecoveredT::Indeterminate => s.serialize_str("indeterminate"),
        }
    }
}

/// `(5a^2 - 50ab, 32bd + 16c^2 + 40cd)`.
pub fn t_fraction(p: &[Rational]) -> (Rational, Rational) {
    let (a, b, c, d) = (&p[0], &p[1], &p[2], &p[3]);
    let num = a * a * int(5) - a * b * int(50);
    let den = b * d * int(32) + c * c * int(16) + c * d * int(40);
    (num, den)
}

pub fn recover_t(p: &SurfacePoint) -> Result<RecoveredT> {
    if !on_surface(p) {
        return Err(Error::Usage(format!("{:?} is not on the surface", p.coords)));
    }
    let (num, den) = t_fraction(&p.as_rationals());
    Ok(match (num.is_zero(), den.is_zero()) {
        (_, false) => RecoveredT::Finite(num / den),
        (false, true) => RecoveredT::Infinity,
        (true, true) => RecoveredT::Indeterminate,
    })
}

/// The five lines on `X`, each parametrized by two homogeneous parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SurfaceLine {
    /// `a = 10b, c = -3b/5`; `t = 0`.
    L1,
    /// `a = b = 0`; `t = 0`.
    L2,
    /// `b = 21d/32, c = -3d/4`; `t` infinite.
    L3,
    /// `a = 125d/16, c = -5d/4`; `t = -3125/256`.
    L4,
    /// `c = d = 0`, inside the singular locus.
    L5,
}

impl SurfaceLine {
    pub const ALL: [SurfaceLine; 5] = [SurfaceLine::L1, SurfaceLine::L2, SurfaceLine::L3, SurfaceLine::L4, SurfaceLine::L5];

    /// Coordinates `(a, b, c, d)` at parameters `(u, v)`.
    pub fn coords(self, u: &Rational, v: &Rational) -> [Rational; 4] {
        let z = Rational::zero;
        match self {
            SurfaceLine::L1 => [u * int(10), u.clone(), u * rat(-3, 5), v.clone()],
            SurfaceLine::L2 => [z(), z(), u.clone(), v.clone()],
            SurfaceLine::L3 => [u.clone(), v * rat(21, 32), v * rat(-3, 4), v.clone()],
            SurfaceLine::L4 => [v * rat(125, 16), u.clone(), v * rat(-5, 4), v.clone()],
            SurfaceLine::L5 => [u.clone(), v.clone(), z(), z()],
        }
    }
}

/// Rational curves on `X` parametrized by `s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RationalCurve {
    R1,
    R2,
    /// The curve behind the two-trinomial family.
    R3,
    R4,
    /// Lies in the singular locus.
    R5,
}

impl RationalCurve {
    pub const ALL: [RationalCurve; 5] =
        [RationalCurve::R1, RationalCurve::R2, RationalCurve::R3, RationalCurve::R4, RationalCurve::R5];

    pub fn parse(name: &str) -> Result<Self> {
        match name.trim().to_ascii_uppercase().as_str() {
            "R1" => Ok(RationalCurve::R1),
            "R2" => Ok(RationalCurve::R2),
            "R3" => Ok(RationalCurve::R3),
            "R4" => Ok(RationalCurve::R4),
            "R5" => Ok(RationalCurve::R5),
            _ => Err(Error::Parse { what: "rational curve name", input: name.to_string() }),
        }
    }

    /// Unnormalized coordinates `(a, b, c, d)` at `s`.
    pub fn coords(self, s: &Rational) -> [Rational; 4] {
        let s2 = s * s;
        let s3 = &s2 * s;
        let s4 = &s3 * s;
        match self {
            RationalCurve::R1 => [
                &s4 * rat(-3, 100) - &s3 * rat(1, 5) + &s2,
                &s3 * rat(3, 100) + &s2 * rat(1, 5) - s,
                Rational::zero(),
                &s2 * rat(32, 125) + s * rat(24, 25) + rat(16, 5),
            ],
            RationalCurve::R2 => {
                let d = &s2 * rat(8, 625) + s * rat(2, 125) - rat(4, 25);
                [
                    &s4 * rat(7, 2000) + &s3 * rat(1, 100) + &s2 * rat(1, 4) + s,
                    &s3 * rat(-7, 2000) - &s2 * rat(1, 100) - s * rat(1, 4) - int(1),
                    &d * rat(-5, 2),
                    d,
                ]
            }
            RationalCurve::R3 => {
                let d = s * rat(-32, 625) + rat(16, 125);
                [
                    &s3 * rat(-1, 250) + &s2 * rat(2, 25) - s * rat(1, 2) + int(1),
                    &s2 * rat(-1, 250) + rat(1, 10),
                    &d * rat(-5, 4),
                    d,
                ]
            }
            RationalCurve::R4 => [Rational::zero(), &s2 * rat(-1, 2) - s * rat(5, 4), s.clone(), int(1)],
            RationalCurve::R5 => [
                &s2 * int(-5) - s * rat(25, 2),
                &s2 * rat(-1, 2) - s * rat(5, 4),
                s.clone(),
                int(1),
            ],
        }
    }

    pub fn point(self, s: &Rational) -> Result<SurfacePoint> {
        CurvePoint::from_rationals(&self.coords(s))
            .map_err(|_| Error::UndefinedInput(format!("{self:?} degenerates at s = {s}")))
    }
}

/// How a point of `X` relates to the t-form curve of its recovered `t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Consistency {
    /// The point satisfies both curve equations for this `t`.
    OnCurve {
        #[serde(with = "crate::algebra::rational::serde_str")]
        t: Rational,
    },
    /// The recovered `t` is valid but the curve equations fail.
    OffCurve {
        #[serde(with = "crate::algebra::rational::serde_str")]
        t: Rational,
    },
    /// `t` is undefined, infinite, 0 or `-3125/256`.
    Degenerate { reason: String },
}

pub fn consistency_with_curve(p: &SurfacePoint) -> Result<Consistency> {
    let t = match recover_t(p)? {
        RecoveredT::Finite(t) => t,
        RecoveredT::Infinity => return Ok(Consistency::Degenerate { reason: "t is infinite".into() }),
        RecoveredT::Indeterminate => return Ok(Consistency::Degenerate { reason: "t is indeterminate".into() }),
    };
    if t.is_zero() || t == rat(-3125, 256) {
        return Ok(Consistency::Degenerate { reason: format!("t = {t} is excluded") });
    }
    let c = curve_from_t(&t)?;
    Ok(if c.contains(p) { Consistency::OnCurve { t } } else { Consistency::OffCurve { t } })
}

/// `Res_t` of the two t-form curve equations, as a form in `(a, b, c, d)`.
pub fn t_resultant() -> MPoly {
    let n = 4;
    let m = |c: i64, e: [u32; 4]| MPoly::from_terms(n, [(e.to_vec(), int(c))]);
    let sum = |v: Vec<MPoly>| v.into_iter().fold(MPoly::zero(n), |acc, p| &acc + &p);
    // quadric = q0 + t q1
    let q0 = sum(vec![m(-5, [2, 0, 0, 0]), m(50, [1, 1, 0, 0])]);
    let q1 = sum(vec![m(32, [0, 1, 0, 1]), m(16, [0, 0, 2, 0]), m(40, [0, 0, 1, 1])]);
    // cubic = c0 + t c1 + t^2 c2
    let c0 = sum(vec![m(-10, [3, 0, 0, 0]), m(25, [2, 1, 0, 0]), m(-125, [2, 0, 1, 0])]);
    let c1 = sum(vec![
        m(-160, [1, 0, 1, 1]),
        m(-100, [1, 0, 0, 2]),
        m(64, [0, 2, 1, 0]),
        m(80, [0, 2, 0, 1]),
        m(80, [0, 1, 2, 0]),
    ]);
    let c2 = sum(vec![m(-64, [0, 0, 1, 2]), m(-48, [0, 0, 0, 3])]);
    // Res(q1 t + q0, c2 t^2 + c1 t + c0) = c2 q0^2 - c1 q0 q1 + c0 q1^2
    
    &(&(&c2 * &q0.pow(2)) - &(&(&c1 * &q0) * &q1)) + &(&c0 * &q1.pow(2))
}

/// The cofactor `Res_t / X` when the resultant is divisible by the surface form.
pub fn elimination_cofactor() -> Option<MPoly> {
    let (q, r) = t_resultant().div_rem(&surface_form());
    r.is_zero().then_some(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(xs: &[i64]) -> SurfacePoint {
        CurvePoint::from_i64(xs)
    }

    #[test]
    fn membership() {
        let l1 = CurvePoint::from_rationals(&[int(10), int(1), rat(-3, 5), int(0)]).unwrap();
        assert!(on_surface(&l1));
        assert!(on_surface(&pt(&[0, 0, 1, 1])));
        assert!(!on_surface(&pt(&[1, 1, 1, 1])));
        assert_eq!(form_value(&[int(1), int(1), int(1), int(1)]).unwrap(), int(11701));
    }

    #[test]
    fn recovered_t_on_lines() {
        let (u, v) = (rat(3, 7), rat(-2, 5));
        let at = |l: SurfaceLine| recover_t(&CurvePoint::from_rationals(&l.coords(&u, &v)).unwrap()).unwrap();
        assert_eq!(at(SurfaceLine::L1), RecoveredT::Finite(int(0)));
        assert_eq!(at(SurfaceLine::L2), RecoveredT::Finite(int(0)));
        assert_eq!(at(SurfaceLine::L3), RecoveredT::Infinity);
        assert_eq!(at(SurfaceLine::L4), RecoveredT::Finite(rat(-3125, 256)));
        assert!(recover_t(&pt(&[1, 1, 1, 1])).is_err());
    }

    #[test]
    fn rational_curves_lie_on_surface() {
        for r in RationalCurve::ALL {
            for k in -3..=3 {
                let s = rat(k, 2);
                if let Ok(p) = r.point(&s) {
                    assert!(on_surface(&p), "{r:?} at {s}");
                }
            }
        }
        let r4 = RationalCurve::R4.coords(&int(1));
        assert_eq!(r4, [int(0), rat(-7, 4), int(1), int(1)]);
        let r3 = RationalCurve::R3.coords(&int(0));
        assert_eq!(r3, [int(1), rat(1, 10), rat(-4, 25), rat(16, 125)]);
        let r5 = RationalCurve::R5.coords(&int(2));
        assert_eq!(r5, [int(-45), rat(-9, 2), int(2), int(1)]);
    }

    #[test]
    fn resultant_is_surface_times_a() {
        let cof = elimination_cofactor().expect("divisible");
        assert_eq!(cof, MPoly::var(4, 0).scale(&int(-80)));
    }

    #[test]
    fn consistency() {
        let p = pt(&[-168, 45, 95, 55]);
        assert!(on_surface(&p));
        assert_eq!(consistency_with_curve(&p).unwrap(), Consistency::OnCurve { t: rat(6, 5) });
        let l1 = CurvePoint::from_rationals(&SurfaceLine::L1.coords(&int(1), &int(2))).unwrap();
        assert!(matches!(consistency_with_curve(&l1).unwrap(), Consistency::Degenerate { .. }));
    }
}
