//! Closed forms for the exponent of `(x + 1)` split off by the generator
//! partition.

use serde::Serialize;

use super::enumeration::{
    enumerate_prime_factor, enumerate_prime_square, enumerate_prime_square_non_dividing,
    enumerate_squarefree_pair, CaseProfile,
};
use crate::error::{Error, Result};
use crate::group::{all_cyclic_subgroups, GroupSpec};
use crate::numtheory::{distinct_prime_pair, divisors, gcd, is_prime, lcm, phi, prime_power};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "pattern", rename_all = "snake_case")]
pub enum AlphaPattern {
    /// gcd(m, n) = 1, so the group is cyclic of order mn.
    Cyclic { order: u64 },
    /// Z_p x Z_n, p | n.
    PrimeFactor { p: u64, n: u64 },
    /// Z_pq x Z_n, pq | n.
    SquarefreePair { p: u64, q: u64, n: u64 },
    /// Z_{p^2} x Z_n, p^2 | n.
    PrimeSquare { p: u64, n: u64 },
    /// Z_{p^2} x Z_n, p || n.
    PrimeSquareNonDividing { p: u64, n: u64 },
}

impl AlphaPattern {
    /// The group the pattern describes, in the orientation it was matched.
    pub fn spec(&self) -> GroupSpec {
        let (m, n) = match *self {
            Self::Cyclic { order } => (1, order),
            Self::PrimeFactor { p, n } => (p, n),
            Self::SquarefreePair { p, q, n } => (p * q, n),
            Self::PrimeSquare { p, n } | Self::PrimeSquareNonDividing { p, n } => (p * p, n),
        };
        GroupSpec::new(m, n).expect("pattern parameters are positive")
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::Cyclic { .. } => "cyclic",
            Self::PrimeFactor { .. } => "prime_factor",
            Self::SquarefreePair { .. } => "squarefree_pair",
            Self::PrimeSquare { .. } => "prime_square",
            Self::PrimeSquareNonDividing { .. } => "prime_square_non_dividing",
        }
    }
}

fn pattern_of(m: u64, n: u64) -> Option<AlphaPattern> {
    if gcd(m, n) == 1 {
        return Some(AlphaPattern::Cyclic { order: m * n });
    }
    if is_prime(m) && n % m == 0 {
        return Some(AlphaPattern::PrimeFactor { p: m, n });
    }
    if let Some((p, q)) = distinct_prime_pair(m) {
        if n % m == 0 {
            return Some(AlphaPattern::SquarefreePair { p, q, n });
        }
    }
    if let Some((p, 2)) = prime_power(m) {
        if n % (p * p) == 0 {
            return Some(AlphaPattern::PrimeSquare { p, n });
        }
        if n % p == 0 {
            return Some(AlphaPattern::PrimeSquareNonDividing { p, n });
        }
    }
    None
}

/// First pattern matching `(m, n)`, `(n, m)` or the invariant-factor form
/// `(gcd, lcm)`, all of which describe isomorphic groups.
pub fn match_alpha_pattern(spec: &GroupSpec) -> Option<AlphaPattern> {
    let (m, n) = (spec.m(), spec.n());
    [(m, n), (n, m), (gcd(m, n), lcm(m, n))]
        .into_iter()
        .find_map(|(a, b)| pattern_of(a, b))
}

/// `mn - l`, with `l` the number of cyclic subgroups.
pub fn alpha_generic(spec: &GroupSpec) -> u64 {
    spec.order() - all_cyclic_subgroups(spec).len() as u64
}

fn class_sum(profile: &CaseProfile, label: &str) -> u64 {
    profile
        .class(label)
        .map(|c| c.divisors.iter().map(|&d| phi(d) - 1).sum())
        .unwrap_or(0)
}

/// `sum over classes of (subgroups per divisor) * sum (phi(d) - 1)`.
fn weighted(profile: &CaseProfile) -> u64 {
    profile
        .classes
        .iter()
        .map(|c| c.per_divisor * class_sum(profile, c.label))
        .sum()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlphaReport {
    pub pattern: AlphaPattern,
    /// Closed form with each class weighted by its own subgroup count.
    pub closed_form: u64,
    /// The expression exactly as printed; differs from `closed_form` only
    /// for Z_{p^2} x Z_n with p^2 | n.
    pub printed: u64,
    /// `mn - l` computed from the subgroup list.
    pub generic: u64,
}

impl AlphaReport {
    pub fn consistent(&self) -> bool {
        self.closed_form == self.generic
    }

    pub fn printed_matches(&self) -> bool {
        self.printed == self.generic
    }
}

fn evaluate(pattern: AlphaPattern) -> Result<(u64, u64)> {
    Ok(match pattern {
        AlphaPattern::Cyclic { order } => {
            let a = divisors(order)?.iter().map(|&d| phi(d) - 1).sum();
            (a, a)
        }
        AlphaPattern::PrimeFactor { p, n } => {
            let a = weighted(&enumerate_prime_factor(p, n)?.profile);
            (a, a)
        }
        AlphaPattern::SquarefreePair { p, q, n } => {
            let a = weighted(&enumerate_squarefree_pair(p, q, n)?.profile);
            (a, a)
        }
        AlphaPattern::PrimeSquare { p, n } => {
            let prof = enumerate_prime_square(p, n)?.profile;
            let printed = p * class_sum(&prof, "r1")
                + (p + 1) * class_sum(&prof, "r2")
                + p * p * class_sum(&prof, "r3")
                + (p * p + p) * class_sum(&prof, "coprime");
            (weighted(&prof), printed)
        }
        AlphaPattern::PrimeSquareNonDividing { p, n } => {
            let prof = enumerate_prime_square_non_dividing(p, n)?.profile;
            let coprime = &prof.class("c").expect("class present").divisors;
            let a = class_sum(&prof, "c")
                + (p + 1) * class_sum(&prof, "divisible")
                + p * coprime.iter().map(|&d| phi(d * p * p) - 1).sum::<u64>();
            (a, a)
        }
    })
}

pub fn alpha_report(spec: &GroupSpec) -> Result<AlphaReport> {
    let pattern = match_alpha_pattern(spec).ok_or(Error::NoClosedForm {
        m: spec.m(),
        n: spec.n(),
    })?;
    let (closed_form, printed) = evaluate(pattern)?;
    Ok(AlphaReport {
        pattern,
        closed_form,
        printed,
        generic: alpha_generic(spec),
    })
}

/// Closed-form exponent; errors when no pattern applies.
pub fn alpha_exponent(spec: &GroupSpec) -> Result<u64> {
    let pattern = match_alpha_pattern(spec).ok_or(Error::NoClosedForm {
        m: spec.m(),
        n: spec.n(),
    })?;
    Ok(evaluate(pattern)?.0)
}
