//! Galois-group identification from Frobenius cycle types. This is a
//! heuristic: it reports the smallest transitive quintic group compatible
//! with the discriminant's square class and the factorization patterns seen
//! modulo small primes. No resolvents are computed.

use std::collections::BTreeMap;

use num_traits::Signed;
use serde::Serialize;

use super::Trinomial;
use crate::algebra::factor::{cycle_type_mod_p, factor_over_q};
use crate::algebra::integer::{exact_sqrt, primes_up_to};
use crate::algebra::rational::square_class;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum GaloisGroup {
    C5,
    D10,
    F20,
    A5,
    S5,
}

impl GaloisGroup {
    /// Cycle types (as descending part lists) occurring in the group.
    pub fn cycle_types(self) -> &'static [&'static [usize]] {
        const ID: &[usize] = &[1, 1, 1, 1, 1];
        const FIVE: &[usize] = &[5];
        const DOUBLE_TRANSPOSITION: &[usize] = &[2, 2, 1];
        const FOUR: &[usize] = &[4, 1];
        const THREE: &[usize] = &[3, 1, 1];
        match self {
            GaloisGroup::C5 => &[ID, FIVE],
            GaloisGroup::D10 => &[ID, FIVE, DOUBLE_TRANSPOSITION],
            GaloisGroup::F20 => &[ID, FIVE, DOUBLE_TRANSPOSITION, FOUR],
            GaloisGroup::A5 => &[ID, FIVE, DOUBLE_TRANSPOSITION, THREE],
            GaloisGroup::S5 => &[ID, FIVE, DOUBLE_TRANSPOSITION, FOUR, THREE, &[2, 1, 1, 1], &[3, 2]],
        }
    }

    pub fn allows(self, cycle_type: &[usize]) -> bool {
        self.cycle_types().contains(&cycle_type)
    }

    /// Groups contained in `A5` have square discriminant.
    pub fn is_even(self) -> bool {
        matches!(self, GaloisGroup::C5 | GaloisGroup::D10 | GaloisGroup::A5)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GaloisEvidence {
    pub discriminant_is_square: bool,
    pub prime_bound: u64,
    pub good_primes: usize,
    /// Observed cycle types, written like `"2^2 1"`, with their counts.
    pub cycle_types: BTreeMap<String, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GaloisGuess {
    pub group: GaloisGroup,
    pub heuristic: bool,
    pub evidence: GaloisEvidence,
}

/// `"2^2 1"` for `[2, 2, 1]`.
pub fn format_cycle_type(parts: &[usize]) -> String {
    let mut out: Vec<String> = Vec::new();
    let mut i = 0;
    while i < parts.len() {
        let mut j = i;
        while j < parts.len() && parts[j] == parts[i] {
            j += 1;
        }
        out.push(if j - i == 1 { parts[i].to_string() } else { format!("{}^{}", parts[i], j - i) });
        i = j;
    }
    out.join(" ")
}

/// Smallest group compatible with the square class of the discriminant and
/// the cycle types of `f mod p` for good primes `p <= prime_bound`.
pub fn galois_type_heuristic(f: &Trinomial, prime_bound: u64) -> Result<GaloisGuess> {
    let poly = f.to_poly();
    if !factor_over_q(&poly)?.is_irreducible() {
        return Err(Error::Usage(format!("{f} is reducible over Q")));
    }
    let disc = f.discriminant();
    let square = !disc.is_negative() && exact_sqrt(&square_class(&disc)?).is_some();
    let (_, ints) = poly.primitive_integer_part();
    let mut seen: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let mut good = 0;
    for p in primes_up_to(prime_bound) {
        if let Some(ct) = cycle_type_mod_p(&ints, p) {
            good += 1;
            *seen.entry(ct).or_default() += 1;
        }
    }
    let candidates: &[GaloisGroup] = if square {
        &[GaloisGroup::C5, GaloisGroup::D10, GaloisGroup::A5]
    } else {
        &[GaloisGroup::F20]
    };
    let group = candidates
        .iter()
        .copied()
        .find(|g| seen.keys().all(|ct| g.allows(ct)))
        .unwrap_or(GaloisGroup::S5);
    let evidence = GaloisEvidence {
        discriminant_is_square: square,
        prime_bound,
        good_primes: good,
        cycle_types: seen.into_iter().map(|(k, v)| (format_cycle_type(&k), v)).collect(),
    };
    Ok(GaloisGuess { group, heuristic: true, evidence })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;

    #[test]
    fn known_groups() {
        let dihedral = galois_type_heuristic(&Trinomial::new(int(-5), int(12)), 500).unwrap();
        assert_eq!(dihedral.group, GaloisGroup::D10);
        assert!(dihedral.evidence.discriminant_is_square);
        let pure = galois_type_heuristic(&Trinomial::new(int(0), int(-18)), 500).unwrap();
        assert_eq!(pure.group, GaloisGroup::F20);
        assert!(pure.evidence.cycle_types.contains_key("4 1"));
        let generic = galois_type_heuristic(&Trinomial::new(int(1), int(3)), 500).unwrap();
        assert_eq!(generic.group, GaloisGroup::S5);
    }

    #[test]
    fn reducible_rejected() {
        let r = galois_type_heuristic(&Trinomial::new(int(1), int(1)), 100);
        assert!(matches!(r, Err(Error::Usage(_))));
    }

    #[test]
    fn cycle_type_names() {
        assert_eq!(format_cycle_type(&[2, 2, 1]), "2^2 1");
        assert_eq!(format_cycle_type(&[1, 1, 1, 1, 1]), "1^5");
        assert_eq!(format_cycle_type(&[5]), "5");
    }
}
