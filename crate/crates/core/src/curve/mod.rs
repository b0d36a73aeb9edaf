//! The curve of elements `beta = a + b alpha + c alpha^2 + d alpha^3 + e alpha^4`
//! in a quintic field whose characteristic polynomial is a trinomial.
//!
//! Vanishing of the `x^4` coefficient is a linear condition that eliminates
//! one coordinate; the `x^3` and `x^2` coefficients then cut out a curve in
//! projective 3-space in the remaining four coordinates. Rational points up
//! to scaling correspond to trinomials with a root in the field, up to
//! equivalence.

mod search;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::algebra::factor::is_irreducible;
use crate::algebra::mpoly::Monomial;
use crate::algebra::rational::{common_denominator, int, pow, rat};
use crate::algebra::{MPoly, Rational, UniPoly};
use crate::error::{Error, Result};
use crate::numberfield::{generic_char_poly, FieldElement, FieldRef, NumberField};
use crate::trinomial::{EquivClass, Trinomial};

pub use search::{search_box, SearchBox};

/// Coordinate names, indexed like the power basis.
pub const VAR_NAMES: [&str; 5] = ["a", "b", "c", "d", "e"];

#[derive(Clone, Debug)]
pub struct CurveCK {
    field: FieldRef,
    t: Option<Rational>,
    /// Trace condition in all five coordinates.
    linear: MPoly,
    elim_var: usize,
    /// The eliminated coordinate as a form in the search coordinates.
    elim_expr: MPoly,
    search_vars: [usize; 4],
    quadric: MPoly,
    cubic: MPoly,
}

/// A primitive integer point in the search coordinates, first nonzero entry positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CurvePoint {
    pub coords: Vec<BigInt>,
}

impl CurvePoint {
    /// Scales rational coordinates to the primitive normalized integer tuple.
    pub fn from_rationals(xs: &[Rational]) -> Result<CurvePoint> {
        if xs.iter().all(Zero::is_zero) {
            return Err(Error::Usage("the zero vector is not a projective point".into()));
        }
        let den = common_denominator(xs);
        let ints: Vec<BigInt> = xs.iter().map(|x| (x * Rational::from_integer(den.clone())).to_integer()).collect();
        Ok(CurvePoint::normalized(ints))
    }

    pub fn from_i64(xs: &[i64]) -> CurvePoint {
        CurvePoint::normalized(xs.iter().map(|&x| BigInt::from(x)).collect())
    }

    fn normalized(mut ints: Vec<BigInt>) -> CurvePoint {
        let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        let neg = ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
        for x in ints.iter_mut() {
            *x = &*x / &g;
            if neg {
                *x = -&*x;
            }
        }
        CurvePoint { coords: ints }
    }

    /// Largest absolute coordinate.
    pub fn height(&self) -> BigInt {
        self.coords.iter().map(|x| x.abs()).max().unwrap_or_default()
    }

    pub fn as_rationals(&self) -> Vec<Rational> {
        self.coords.iter().cloned().map(Rational::from_integer).collect()
    }
}

impl Serialize for CurvePoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coords.iter().map(|x| x.to_string()))
    }
}

/// Image of a curve point: the trinomial `x^5 + gamma x + delta` with `beta`
/// as a root, its class, and `(gamma^5, delta^4)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointImage {
    pub trinomial: Trinomial,
    pub class: EquivClass,
    #[serde(with = "crate::algebra::rational::serde_vec")]
    pub rho: Vec<Rational>,
}

fn mono(nvars: usize, c: Rational, e: &[u32]) -> MPoly {
    MPoly::from_terms(nvars, [(e.to_vec() as Monomial, c)])
}

fn t_form_poly(t: &Rational) -> UniPoly {
    UniPoly::new(vec![t.clone(), t.clone(), int(0), int(0), int(0), int(1)])
}

fn field_or_ring(g: &UniPoly) -> Result<FieldRef> {
    if is_irreducible(g) {
        NumberField::new(g)
    } else {
        NumberField::quotient_ring(g)
    }
}

/// The curve for the field `Q[x]/(x^5 + t x + t)` in the closed form with
/// `4 t e = 5 a`.
pub fn curve_from_t(t: &Rational) -> Result<CurveCK> {
    if t.is_zero() {
        return Err(Error::Domain("t = 0: the elimination 4te = 5a degenerates".into()));
    }
    if t == &rat(-3125, 256) {
        return Err(Error::Domain("t = -3125/256: x^5 + tx + t has a repeated factor".into()));
    }
    let n = 5;
    let field = field_or_ring(&t_form_poly(t))?;
    let t2 = t * t;
    let sum = |terms: Vec<(Rational, [u32; 5])>| {
        terms.into_iter().fold(MPoly::zero(n), |acc, (c, e)| &acc + &mono(n, c, &e))
    };
    let quadric = sum(vec![
        (int(-5), [2, 0, 0, 0, 0]),
        (int(50), [1, 1, 0, 0, 0]),
        (t * int(32), [0, 1, 0, 1, 0]),
        (t * int(16), [0, 0, 2, 0, 0]),
        (t * int(40), [0, 0, 1, 1, 0]),
    ]);
    let cubic = sum(vec![
        (int(-10), [3, 0, 0, 0, 0]),
        (int(25), [2, 1, 0, 0, 0]),
        (int(-125), [2, 0, 1, 0, 0]),
        (t * int(-160), [1, 0, 1, 1, 0]),
        (t * int(-100), [1, 0, 0, 2, 0]),
        (t * int(64), [0, 2, 1, 0, 0]),
        (t * int(80), [0, 2, 0, 1, 0]),
        (t * int(80), [0, 1, 2, 0, 0]),
        (&t2 * int(-64), [0, 0, 1, 2, 0]),
        (&t2 * int(-48), [0, 0, 0, 3, 0]),
    ]);
    let linear = &MPoly::var(n, 0).scale(&int(5)) - &MPoly::var(n, 4).scale(&(t * int(4)));
    let elim_expr = MPoly::var(n, 0).scale(&(int(5) / (t * int(4))));
    Ok(CurveCK { field, t: Some(t.clone()), linear, elim_var: 4, elim_expr, search_vars: [0, 1, 2, 3], quadric, cubic })
}

/// The curve of a monic irreducible quintic `g`, read off from the
/// characteristic polynomial of the generic element. The coordinate removed
/// by the trace condition is the one with the largest coefficient in absolute
/// value, ties going to the higher power of alpha.
pub fn curve_from_field(g: &UniPoly) -> Result<CurveCK> {
    let field = NumberField::new(g)?;
    let coeffs = generic_char_poly(field.defining_poly());
    let linear = coeffs[4].clone();
    let mut best: Option<(usize, Rational)> = None;
    for i in 0..5 {
        let mut e = vec![0; 5];
        e[i] = 1;
        let c = linear.coeff(&e).abs();
        if !c.is_zero() && best.as_ref().is_none_or(|(_, b)| &c >= b) {
            best = Some((i, c));
        }
    }
    let elim = best.ok_or_else(|| Error::Usage("trace form vanishes identically".into()))?.0;
    build_general(field, coeffs, elim)
}

/// As [`curve_from_field`] with an explicit eliminated coordinate.
pub fn curve_from_field_eliminating(g: &UniPoly, elim_var: usize) -> Result<CurveCK> {
    if elim_var >= 5 {
        return Err(Error::Usage(format!("coordinate index {elim_var} out of range")));
    }
    let field = NumberField::new(g)?;
    let coeffs = generic_char_poly(field.defining_poly());
    build_general(field, coeffs, elim_var)
}

fn build_general(field: FieldRef, coeffs: Vec<MPoly>, elim: usize) -> Result<CurveCK> {
    let n = 5;
    let linear = coeffs[4].clone();
    let mut e = vec![0; n];
    e[elim] = 1;
    let lc = linear.coeff(&e);
    if lc.is_zero() {
        return Err(Error::Usage(format!("coordinate {} does not occur in the trace form", VAR_NAMES[elim])));
    }
    // y_elim = -(linear - lc y_elim) / lc
    let rest = &linear - &MPoly::var(n, elim).scale(&lc);
    let elim_expr = rest.scale(&(-lc.recip()));
    let quadric = coeffs[3].substitute(elim, &elim_expr);
    let cubic = coeffs[2].substitute(elim, &elim_expr);
    let search: Vec<usize> = (0..n).filter(|&i| i != elim).collect();
    Ok(CurveCK {
        field,
        t: None,
        linear,
        elim_var: elim,
        elim_expr,
        search_vars: [search[0], search[1], search[2], search[3]],
        quadric,
        cubic,
    })
}

/// `x^10 - 3t x^6 - 11t x^5 - 4t^2 x^2 + 4t^2 x - t^2`.
pub fn field_l_polynomial(t: &Rational) -> Result<UniPoly> {
    if t.is_zero() {
        return Err(Error::Domain("t = 0".into()));
    }
    let t2 = t * t;
    let mut c = vec![Rational::zero(); 11];
    c[10] = Rational::one();
    c[6] = t * int(-3);
    c[5] = t * int(-11);
    c[2] = &t2 * int(-4);
    c[1] = &t2 * int(4);
    c[0] = -t2;
    Ok(UniPoly::new(c))
}

impl CurveCK {
    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn t(&self) -> Option<&Rational> {
        self.t.as_ref()
    }

    pub fn linear(&self) -> &MPoly {
        &self.linear
    }

    pub fn quadric(&self) -> &MPoly {
        &self.quadric
    }

    pub fn cubic(&self) -> &MPoly {
        &self.cubic
    }

    pub fn eliminated_var(&self) -> usize {
        self.elim_var
    }

    pub fn elimination(&self) -> &MPoly {
        &self.elim_expr
    }

    pub fn search_vars(&self) -> [usize; 4] {
        self.search_vars
    }

    pub fn search_var_names(&self) -> Vec<&'static str> {
        self.search_vars.iter().map(|&i| VAR_NAMES[i]).collect()
    }

    /// All five coordinates of `beta` from a point in the search coordinates.
    pub fn full_coords(&self, p: &[Rational]) -> Result<Vec<Rational>> {
        if p.len() != 4 {
            return Err(Error::Usage(format!("expected 4 coordinates, got {}", p.len())));
        }
        let mut full = vec![Rational::zero(); 5];
        for (&i, x) in self.search_vars.iter().zip(p) {
            full[i] = x.clone();
        }
        full[self.elim_var] = self.elim_expr.eval(&full);
        Ok(full)
    }

    pub fn contains(&self, p: &CurvePoint) -> bool {
        match self.full_coords(&p.as_rationals()) {
            Ok(full) => self.quadric.eval(&full).is_zero() && self.cubic.eval(&full).is_zero(),
            Err(_) => false,
        }
    }

    pub fn element(&self, p: &CurvePoint) -> Result<FieldElement> {
        let full = self.full_coords(&p.as_rationals())?;
        self.field.element(full)
    }

    /// `x^4`, `x^3` and `x^2` coefficients of the characteristic polynomial
    /// of the point's element all vanish.
    pub fn satisfies_power_sum_conditions(&self, p: &CurvePoint) -> Result<bool> {
        let cp = self.element(p)?.char_poly();
        Ok((2..5).all(|k| cp.coeff(k).is_zero()))
    }

    /// The trinomial having the point's element as a root.
    pub fn point_to_trinomial(&self, p: &CurvePoint) -> Result<PointImage> {
        if !self.contains(p) {
            return Err(Error::Usage(format!("point {:?} is not on the curve", p.coords)));
        }
        let beta = self.element(p)?;
        if beta.is_rational() {
            return Err(Error::DegeneratePoint(format!("{beta} is rational")));
        }
        let cp = beta.char_poly();
        let tri = Trinomial::from_poly(&cp)
            .ok_or_else(|| Error::Usage(format!("characteristic polynomial {cp} is not a trinomial")))?;
        let rho = vec![pow(&tri.a, 5), pow(&tri.b, 4)];
        let class = tri.equiv_class();
        Ok(PointImage { trinomial: tri, class, rho })
    }

    /// The projective point of an element whose characteristic polynomial is a trinomial.
    pub fn trinomial_to_point(&self, beta: &FieldElement) -> Result<CurvePoint> {
        if beta.field().defining_poly() != self.field.defining_poly() {
            return Err(Error::Usage("element of a different field".into()));
        }
        let cp = beta.char_poly();
        if Trinomial::from_poly(&cp).is_none() {
            return Err(Error::Usage(format!("characteristic polynomial {cp} is not a trinomial")));
        }
        let coords: Vec<Rational> = self.search_vars.iter().map(|&i| beta.coords()[i].clone()).collect();
        CurvePoint::from_rationals(&coords)
    }

    /// Polynomials restricted to the four search coordinates, as 4-variable
    /// integer forms (content removed).
    pub(crate) fn integer_forms(&self) -> (IntegerForm, IntegerForm) {
        let restrict = |p: &MPoly| -> IntegerForm {
            let (_, prim) = p.primitive_integer_part();
            prim.terms()
                .map(|(e, c)| (self.search_vars.iter().map(|&i| e[i]).collect(), c.to_integer()))
                .collect()
        };
        (restrict(&self.quadric), restrict(&self.cubic))
    }
}

/// Sparse integer form: `(exponents, coefficient)` terms.
pub(crate) type IntegerForm = Vec<(Vec<u32>, BigInt)>;

/// Result of a bounded point search.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchResult {
    /// Points whose element is irrational, sorted by height then coordinates.
    pub points: Vec<CurvePoint>,
    /// Points whose element lies in Q.
    pub degenerate: Vec<CurvePoint>,
}

/// All primitive points with every coordinate bounded by `height` in absolute value.
pub fn point_search(c: &CurveCK, height: u64) -> Result<SearchResult> {
    let h = i64::try_from(height).map_err(|_| Error::Usage("height bound too large".into()))?;
    if h < 1 {
        return Err(Error::Usage("height bound must be at least 1".into()));
    }
    let found = search_box(c, h, &SearchBox::full(h))?;
    let mut out = SearchResult::default();
    for p in found {
        if c.element(&p)?.is_rational() {
            out.degenerate.push(p);
        } else {
            out.points.push(p);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn known_points() -> Vec<(CurvePoint, EquivClass)> {
        vec![
            (CurvePoint::from_i64(&[0, 1, 0, 0]), EquivClass::Generic(rat(6, 5))),
            (CurvePoint::from_i64(&[-168, 45, 95, 55]), EquivClass::Pure(int(18))),
            (CurvePoint::from_i64(&[36, -150, 120, 35]), EquivClass::Pure(int(432))),
            (CurvePoint::from_i64(&[-88, -70, -75, 60]), EquivClass::Pure(int(324))),
            (CurvePoint::from_i64(&[-24, 100, -80, 195]), EquivClass::Pure(int(24))),
        ]
    }

    #[test]
    fn t_form_curve_contains_known_points() {
        let c = curve_from_t(&rat(6, 5)).unwrap();
        for (p, class) in known_points() {
            assert!(c.contains(&p), "{p:?}");
            assert!(c.satisfies_power_sum_conditions(&p).unwrap());
            assert_eq!(c.point_to_trinomial(&p).unwrap().class, class);
        }
        assert!(!c.contains(&CurvePoint::from_i64(&[1, 1, 1, 1])));
    }

    #[test]
    fn small_search_finds_base_point_and_partitions_agree() {
        let c = curve_from_t(&rat(6, 5)).unwrap();
        let r = point_search(&c, 1).unwrap();
        assert!(r.points.contains(&CurvePoint::from_i64(&[0, 1, 0, 0])));
        let full = search_box(&c, 60, &SearchBox::full(60)).unwrap();
        let mut parts: Vec<CurvePoint> = SearchBox::full(60)
            .split(7)
            .iter()
            .flat_map(|b| search_box(&c, 60, b).unwrap())
            .collect();
        parts.sort_by_key(|p| (p.height(), p.coords.clone()));
        assert_eq!(full, parts);
        assert!(full.iter().all(|p| p.height() <= BigInt::from(60)));
    }

    #[test]
    fn normalization_of_points() {
        let p = CurvePoint::from_rationals(&[rat(-168, 55), rat(9, 11), rat(19, 11), int(1)]).unwrap();
        assert_eq!(p, CurvePoint::from_i64(&[168, -45, -95, -55]));
        assert_eq!(p.height(), BigInt::from(168));
        assert!(CurvePoint::from_rationals(&vec![int(0); 4]).is_err());
    }

    #[test]
    fn excluded_parameters() {
        assert!(matches!(curve_from_t(&int(0)), Err(Error::Domain(_))));
        assert!(matches!(curve_from_t(&rat(-3125, 256)), Err(Error::Domain(_))));
    }

    #[test]
    fn base_point_maps_to_defining_trinomial() {
        for t in [rat(6, 5), rat(-3125, 20736), int(7)] {
            let c = curve_from_t(&t).unwrap();
            let o = CurvePoint::from_i64(&[0, 1, 0, 0]);
            let img = c.point_to_trinomial(&o).unwrap();
            assert_eq!(img.trinomial, Trinomial::t_form(&t));
            let back = c.trinomial_to_point(&c.field().alpha().scale(&int(2))).unwrap();
            assert_eq!(back, o);
        }
    }

    #[test]
    fn general_curve_matches_t_form() {
        let t = rat(6, 5);
        let ct = curve_from_t(&t).unwrap();
        let cg = curve_from_field_eliminating(&t_form_poly(&t), 4).unwrap();
        assert!(cg.quadric().unit_multiple_of(ct.quadric()).is_some());
        // the closed-form cubic agrees with the x^2 condition modulo the quadric
        let (_, r1) = ct.cubic().div_rem(ct.quadric());
        let (_, r2) = cg.cubic().div_rem(ct.quadric());
        assert!(r1.unit_multiple_of(&r2).is_some());
        for (p, _) in known_points() {
            assert!(cg.contains(&p));
        }
    }

    #[test]
    fn pure_quintic_eliminates_a() {
        let g = UniPoly::from_i64(&[-18, 0, 0, 0, 0, 1]);
        let c = curve_from_field(&g).unwrap();
        assert_eq!(c.eliminated_var(), 0);
        assert_eq!(c.search_var_names(), vec!["b", "c", "d", "e"]);
        assert!(c.elimination().is_zero());
        // beta = alpha^2 lies on it: (b, c, d, e) = (0, 1, 0, 0)
        let p = CurvePoint::from_i64(&[0, 1, 0, 0]);
        assert!(c.contains(&p));
        assert_eq!(c.point_to_trinomial(&p).unwrap().class, EquivClass::Pure(int(324)));
    }

    #[test]
    fn l_polynomial() {
        let l = field_l_polynomial(&int(1)).unwrap();
        assert_eq!(l, UniPoly::from_i64(&[-1, 4, -4, 0, 0, -11, -3, 0, 0, 0, 1]));
        assert!(field_l_polynomial(&int(0)).is_err());
    }
}
