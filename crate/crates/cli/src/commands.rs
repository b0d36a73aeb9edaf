use std::io::Write;

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use quintrin_core::algebra::factor::factor_over_q;
use quintrin_core::algebra::{parse_rational, Rational, UniPoly};
use quintrin_core::curve::{curve_from_field, curve_from_t, point_search, CurveCK, CurvePoint, VAR_NAMES};
use quintrin_core::elliptic::{quadratic_twist_factor, WeierstrassCurve};
use quintrin_core::numberfield::{has_root_in_field, NumberField, RootSearch};
use quintrin_core::surface::{consistency_with_curve, form_value, on_surface, recover_t, RationalCurve};
use quintrin_core::trinomial::{
    dihedral_family, galois_type_heuristic, sw2_family, two_trinomial_family, verify_pair, weber_family, EquivClass,
    Trinomial,
};
use quintrin_core::verify;

use crate::config::RunConfig;
use crate::{Command, EllipticCommand, FamilyKind, FieldArgs, Failure, SurfaceCommand, VerifyCommand};

type Out<'a> = &'a mut dyn Write;

fn io(e: std::io::Error) -> Failure {
    Failure::Failed(format!("write failed: {e}"))
}

fn emit_doc(out: Out, v: &impl Serialize) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(v).map_err(|e| Failure::Failed(e.to_string()))?;
    writeln!(out, "{text}").map_err(io)
}

fn emit_line(out: Out, v: &impl Serialize) -> Result<(), Failure> {
    let text = serde_json::to_string(v).map_err(|e| Failure::Failed(e.to_string()))?;
    writeln!(out, "{text}").map_err(io)
}

pub fn dispatch(cmd: Command, cfg: &RunConfig, out: Out) -> Result<(), Failure> {
    match cmd {
        Command::Classify { a, b } => classify(&a, &b, cfg, out),
        Command::Curve(field) => curve(&field, out),
        Command::Search(field) => search(&field, cfg, out),
        Command::RootInField { g, f } => root_in_field(&g, &f, cfg, out),
        Command::Family { kind, param } => family(kind, &param, cfg, out),
        Command::Surface(s) => surface(s, out),
        Command::Elliptic(e) => elliptic(e, out),
        Command::Verify(VerifyCommand::Paper) => verify_suite(cfg, out),
    }
}

fn classify_value(f: &Trinomial, prime_bound: u64) -> Result<Value, Failure> {
    let factorization = factor_over_q(&f.to_poly())?;
    let irreducible = factorization.is_irreducible();
    let class = f.equiv_class();
    let t = match &class {
        EquivClass::Generic(t) => Some(t.to_string()),
        _ => None,
    };
    let galois = if irreducible { Some(galois_type_heuristic(f, prime_bound)?) } else { None };
    Ok(json!({
        "trinomial": f,
        "polynomial": f.to_string(),
        "class": class,
        "t": t,
        "discriminant": f.discriminant().to_string(),
        "irreducible": irreducible,
        "factor_degrees": factorization.degrees(),
        "galois": galois,
    }))
}

fn classify(a: &str, b: &str, cfg: &RunConfig, out: Out) -> Result<(), Failure> {
    let f = Trinomial::parse(a, b)?;
    emit_doc(out, &classify_value(&f, cfg.prime_bound)?)
}

fn build_curve(field: &FieldArgs) -> Result<CurveCK, Failure> {
    match (&field.t, &field.g) {
        (Some(t), None) => Ok(curve_from_t(&parse_rational(t)?)?),
        (None, Some(g)) => Ok(curve_from_field(&UniPoly::parse_coeffs(g)?)?),
        _ => Err(Failure::Usage("give exactly one of --t and --g".into())),
    }
}

fn curve(field: &FieldArgs, out: Out) -> Result<(), Failure> {
    let c = build_curve(field)?;
    let names = &VAR_NAMES[..];
    let elim = VAR_NAMES[c.eliminated_var()];
    emit_doc(
        out,
        &json!({
            "field": c.field().defining_poly(),
            "field_polynomial": c.field().defining_poly().to_string(),
            "is_field": c.field().is_field(),
            "t": c.t().map(ToString::to_string),
            "linear": c.linear().display_with(names).to_string(),
            "eliminated": elim,
            "elimination": format!("{elim} = {}", c.elimination().display_with(names)),
            "coordinates": c.search_var_names(),
            "quadric": c.quadric().display_with(names).to_string(),
            "cubic": c.cubic().display_with(names).to_string(),
        }),
    )
}

fn search(field: &FieldArgs, cfg: &RunConfig, out: Out) -> Result<(), Failure> {
    let c = build_curve(field)?;
    let found = point_search(&c, cfg.height_bound)?;
    for p in &found.points {
        let image = c.point_to_trinomial(p)?;
        emit_line(
            out,
            &json!({
                "point": p,
                "trinomial": image.trinomial,
                "class": image.class,
                "rho": image.rho.iter().map(ToString::to_string).collect::<Vec<_>>(),
            }),
        )?;
    }
    for p in &found.degenerate {
        emit_line(out, &json!({ "point": p, "degenerate": true }))?;
    }
    Ok(())
}

fn root_in_field(g: &str, f: &str, cfg: &RunConfig, out: Out) -> Result<(), Failure> {
    let k = NumberField::new(&UniPoly::parse_coeffs(g)?)?;
    let f = UniPoly::parse_coeffs(f)?;
    let doc = |status: &str, extra: Value| {
        let mut v = json!({
            "field": k.defining_poly(),
            "polynomial": f,
            "status": status,
        });
        if let (Value::Object(m), Value::Object(e)) = (&mut v, extra) {
            m.extend(e);
        }
        v
    };
    match has_root_in_field(&f, &k, cfg.precision_bits, &cfg.denominator_bound)? {
        RootSearch::Certificate(beta) => {
            let verified = beta.eval_poly(&f).is_zero();
            emit_doc(out, &doc("certificate", json!({ "beta": beta, "beta_display": beta.to_string(), "verified": verified })))
        }
        RootSearch::ProvenAbsent(reason) => emit_doc(out, &doc("absent", json!({ "reason": reason }))),
        RootSearch::Inconclusive { precision_bits, denominator_bound, reason } => {
            emit_doc(
                out,
                &doc(
                    "inconclusive",
                    json!({
                        "precision_bits": precision_bits,
                        "denominator_bound": denominator_bound.to_string(),
                        "reason": reason,
                    }),
                ),
            )?;
            Err(Failure::Inconclusive(reason))
        }
    }
}

fn family(kind: FamilyKind, param: &str, cfg: &RunConfig, out: Out) -> Result<(), Failure> {
    let p = parse_rational(param)?;
    let name = format!("{kind:?}").to_lowercase();
    let doc = match kind {
        FamilyKind::Weber | FamilyKind::Dihedral => {
            let f = match kind {
                FamilyKind::Weber => weber_family(&p),
                _ => dihedral_family(&p)?,
            };
            json!({ "family": name, "param": p.to_string(), "member": classify_value(&f, cfg.prime_bound)? })
        }
        FamilyKind::Sw2 => {
            let m = sw2_family(&p)?;
            let certificate = sw2_certificate(&m.radicand, &m.trinomial, cfg)?;
            json!({
                "family": name,
                "param": p.to_string(),
                "radicand": m.radicand.to_string(),
                "trinomial": m.trinomial,
                "polynomial": m.trinomial.to_string(),
                "class": m.trinomial.equiv_class(),
                "root_in_pure_field": certificate,
            })
        }
        FamilyKind::Pair => {
            let pair = two_trinomial_family(&p)?;
            let verified = verify_pair(&pair);
            json!({
                "family": name,
                "param": p.to_string(),
                "f": pair.f,
                "f_polynomial": pair.f.to_string(),
                "h": pair.h,
                "h_polynomial": pair.h.to_string(),
                "beta": pair.beta.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "f_irreducible": pair.f_irreducible,
                "verified": verified,
            })
        }
    };
    emit_doc(out, &doc)
}

/// Root of the member in `Q[m^(1/5)]`, when that quotient is a field.
fn sw2_certificate(m: &Rational, f: &Trinomial, cfg: &RunConfig) -> Result<Value, Failure> {
    let mut c = vec![Rational::from_integer(BigInt::from(0)); 6];
    c[0] = -m.clone();
    c[5] = Rational::from_integer(BigInt::from(1));
    let g = UniPoly::new(c);
    let Ok(k) = NumberField::new(&g) else {
        return Ok(json!({ "status": "not-a-field" }));
    };
    let poly = f.to_poly();
    Ok(match has_root_in_field(&poly, &k, cfg.precision_bits, &cfg.denominator_bound)? {
        RootSearch::Certificate(beta) => {
            json!({ "status": "certificate", "beta": beta, "verified": beta.eval_poly(&poly).is_zero() })
        }
        RootSearch::ProvenAbsent(reason) => json!({ "status": "absent", "reason": reason }),
        RootSearch::Inconclusive { reason, .. } => json!({ "status": "inconclusive", "reason": reason }),
    })
}

fn parse_point(s: &str) -> Result<CurvePoint, Failure> {
    let coords: Vec<Rational> = s.split(',').map(|x| parse_rational(x.trim())).collect::<Result<_, _>>()?;
    if coords.len() != 4 {
        return Err(Failure::Usage(format!("expected 4 coordinates a,b,c,d, got {}", coords.len())));
    }
    Ok(CurvePoint::from_rationals(&coords)?)
}

fn surface(cmd: SurfaceCommand, out: Out) -> Result<(), Failure> {
    match cmd {
        SurfaceCommand::Check { point } => {
            let p = parse_point(&point)?;
            let value = form_value(&p.as_rationals())?;
            let on = on_surface(&p);
            let (t, consistency) = if on {
                (Some(recover_t(&p)?), Some(consistency_with_curve(&p)?))
            } else {
                (None, None)
            };
            emit_doc(
                out,
                &json!({
                    "point": p,
                    "form_value": value.to_string(),
                    "on_surface": on,
                    "t": t,
                    "consistency": consistency,
                }),
            )
        }
        SurfaceCommand::Curve { name, s } => {
            let curve = RationalCurve::parse(&name)?;
            let s = parse_rational(&s)?;
            let p = curve.point(&s)?;
            emit_doc(
                out,
                &json!({
                    "curve": curve,
                    "s": s.to_string(),
                    "coordinates": curve.coords(&s).iter().map(ToString::to_string).collect::<Vec<_>>(),
                    "point": p,
                    "on_surface": on_surface(&p),
                    "t": recover_t(&p)?,
                }),
            )
        }
    }
}

fn curve_doc(e: &WeierstrassCurve) -> Value {
    json!({
        "equation": e.to_string(),
        "coefficients": e,
        "invariants": e.invariants(),
        "short_model": e.short_model().to_string(),
    })
}

fn elliptic(cmd: EllipticCommand, out: Out) -> Result<(), Failure> {
    match cmd {
        EllipticCommand::Info { curve } => emit_doc(out, &curve_doc(&WeierstrassCurve::parse(&curve)?)),
        EllipticCommand::Twist { e1, e2, d } => {
            let e1 = WeierstrassCurve::parse(&e1)?;
            match (e2, d) {
                (Some(e2), None) => {
                    let e2 = WeierstrassCurve::parse(&e2)?;
                    let relation = quadratic_twist_factor(&e1, &e2)?;
                    emit_doc(out, &json!({ "e1": curve_doc(&e1), "e2": curve_doc(&e2), "twist": relation }))
                }
                (None, Some(d)) => {
                    let d = parse_rational(&d)?;
                    let t = e1.twist(&d)?;
                    emit_doc(out, &json!({ "e1": curve_doc(&e1), "d": d.to_string(), "twist": curve_doc(&t) }))
                }
                _ => Err(Failure::Usage("give exactly one of --e2 and --d".into())),
            }
        }
    }
}

fn verify_suite(cfg: &RunConfig, out: Out) -> Result<(), Failure> {
    let report = verify::run_all(&cfg.verify_config());
    write!(out, "{}", report.render()).map_err(io)?;
    if report.all_passed() {
        Ok(())
    } else {
        Err(Failure::Failed("some checks failed".into()))
    }
}
