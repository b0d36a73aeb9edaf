//! Exact rationals. `Rational` is `num_rational::BigRational`, which keeps
//! values in lowest terms with a positive denominator.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::integer::{exact_sqrt, factor_biguint, squarefree_part};
use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn from_bigint(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// Parses `"p/q"`, `"p"` or `"-p/q"`; surrounding whitespace and a leading `+` are accepted.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let err = || Error::Parse { what: "rational", input: s.to_string() };
    let t = s.trim();
    let t = t.strip_prefix('+').unwrap_or(t);
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let ok = |x: &str| {
        let digits = x.strip_prefix('-').unwrap_or(x);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !ok(num) || !ok(den) || den.starts_with('-') {
        return Err(err());
    }
    let n: BigInt = num.parse().map_err(|_| err())?;
    let d: BigInt = den.parse().map_err(|_| err())?;
    if d.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(n, d))
}

/// Integer power with negative exponents allowed (`x` must then be nonzero).
pub fn pow(x: &Rational, e: i32) -> Rational {
    if e >= 0 {
        num_traits::pow(x.clone(), e as usize)
    } else {
        num_traits::pow(x.recip(), e.unsigned_abs() as usize)
    }
}

/// Exact square root when `x` is the square of a rational.
pub fn rational_sqrt(x: &Rational) -> Option<Rational> {
    Some(Rational::new(exact_sqrt(x.numer())?, exact_sqrt(x.denom())?))
}

fn prime_exponents(x: &Rational) -> Vec<(BigUint, i64)> {
    let mut exps: Vec<(BigUint, i64)> = factor_biguint(x.numer().magnitude())
        .into_iter()
        .map(|(p, e)| (p, e as i64))
        .collect();
    exps.extend(
        factor_biguint(x.denom().magnitude())
            .into_iter()
            .map(|(p, e)| (p, -(e as i64))),
    );
    exps
}

/// Canonical representative of `x` modulo nonzero rational fifth powers.
///
/// Each prime exponent is reduced into `0..5`, so the representative is a
/// positive fifth-power-free integer. The sign is absorbed because
/// `-1 = (-1)^5`.
pub fn fifth_power_class(x: &Rational) -> Result<Rational> {
    if x.is_zero() {
        return Err(Error::UndefinedInput("fifth-power class of 0".into()));
    }
    let mut out = BigInt::one();
    for (p, e) in prime_exponents(x) {
        let r = e.mod_floor(&5) as u32;
        out *= num_traits::pow(BigInt::from(p), r as usize);
    }
    Ok(Rational::from_integer(out))
}

/// Squarefree integer representing `x` modulo nonzero rational squares (sign kept).
pub fn square_class(x: &Rational) -> Result<BigInt> {
    if x.is_zero() {
        return Err(Error::UndefinedInput("square class of 0".into()));
    }
    Ok(squarefree_part(&(x.numer() * x.denom())))
}

pub fn abs(x: &Rational) -> Rational {
    x.abs()
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(xs: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    xs.into_iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

pub mod serde_str {
    //! `Rational` as a `"p/q"` JSON string.
    use super::{parse_rational, Rational};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

pub mod serde_vec {
    //! `Vec<Rational>` as a list of `"p/q"` strings.
    use super::{parse_rational, Rational};
    use serde::ser::SerializeSeq;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(xs: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(xs.len()))?;
        for x in xs {
            seq.serialize_element(&x.to_string())?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        v.iter()
            .map(|s| parse_rational(s).map_err(serde::de::Error::custom))
            .collect()
    }
}
