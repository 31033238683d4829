//! Explicit spectra of Z_p x Z_pq, Z_{p^2} x Z_{p^2} and Z_{p^2} x Z_pq.
//!
//! Each closed form lists some eigenvalues with multiplicities and a residual
//! polynomial for the rest. The residual is taken as printed and also
//! recomputed from the exact characteristic polynomial; the two are compared
//! coefficient by coefficient and mismatches are reported, never patched.

use num_bigint::BigInt;
use serde::Serialize;

use crate::charpoly::{
    charpoly_via_quotient, determinant, factor_multiplicity, IntPolynomial, RatPolynomial,
};
use crate::error::{Error, Result};
use crate::group::GroupSpec;
use crate::numtheory::{is_prime, phi};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum SpectrumFamily {
    /// Z_p x Z_pq.
    PrimeByPrimeProduct { p: u64, q: u64 },
    /// Z_{p^2} x Z_{p^2}.
    PrimeSquares { p: u64 },
    /// Z_{p^2} x Z_pq.
    PrimeSquareByProduct { p: u64, q: u64 },
}

impl SpectrumFamily {
    pub fn spec(&self) -> GroupSpec {
        let (m, n) = match *self {
            Self::PrimeByPrimeProduct { p, q } => (p, p * q),
            Self::PrimeSquares { p } => (p * p, p * p),
            Self::PrimeSquareByProduct { p, q } => (p * p, p * q),
        };
        GroupSpec::new(m, n).expect("positive parameters")
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::PrimeByPrimeProduct { .. } => "prime_by_prime_product",
            Self::PrimeSquares { .. } => "prime_squares",
            Self::PrimeSquareByProduct { .. } => "prime_square_by_product",
        }
    }
}

/// Which residual a report should carry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ResidualSource {
    /// Recomputed from the exact characteristic polynomial.
    #[default]
    Oracle,
    /// As printed in the closed form.
    Printed,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FixedEigenvalue {
    pub value_expr: String,
    pub value_numeric: f64,
    pub multiplicity: usize,
}

/// `factor^multiplicity` accounts for the listed eigenvalues.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FixedFactor {
    pub factor: IntPolynomial,
    pub multiplicity: usize,
    pub eigenvalues: Vec<FixedEigenvalue>,
    /// Multiplicity of `factor` in the exact characteristic polynomial.
    pub oracle_multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoefficientMismatch {
    pub degree: usize,
    pub printed: String,
    pub oracle: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClosedFormSpectrum {
    pub family: SpectrumFamily,
    pub spec: GroupSpec,
    pub fixed: Vec<FixedFactor>,
    /// Intermediate eigenvalues named along the way (informational).
    pub intermediate: Vec<FixedEigenvalue>,
    /// Printed residual, primitive with positive leading coefficient.
    pub printed_residual: IntPolynomial,
    /// Exact characteristic polynomial divided by the fixed factors.
    pub oracle_residual: Option<IntPolynomial>,
    pub mismatches: Vec<CoefficientMismatch>,
    pub oracle: IntPolynomial,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FixedJson {
    pub value_expr: String,
    pub value_numeric: f64,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClosedFormJson {
    pub family: SpectrumFamily,
    pub fixed: Vec<FixedJson>,
    pub residual: IntPolynomial,
    pub residual_source: ResidualSource,
    pub printed_residual_matches: bool,
    pub mismatches: Vec<CoefficientMismatch>,
    pub verified: bool,
}

impl ClosedFormSpectrum {
    pub fn fixed_product(&self) -> IntPolynomial {
        self.fixed.iter().fold(IntPolynomial::one(), |acc, f| {
            &acc * &f.factor.pow(f.multiplicity)
        })
    }

    /// Every fixed factor appears in the exact polynomial with exactly the
    /// stated multiplicity.
    pub fn fixed_verified(&self) -> bool {
        self.fixed
            .iter()
            .all(|f| f.multiplicity == f.oracle_multiplicity)
    }

    pub fn printed_residual_matches(&self) -> bool {
        self.oracle_residual.is_some() && self.mismatches.is_empty()
    }

    pub fn residual(&self, source: ResidualSource) -> Option<&IntPolynomial> {
        match source {
            ResidualSource::Oracle => self.oracle_residual.as_ref(),
            ResidualSource::Printed => Some(&self.printed_residual),
        }
    }

    /// Fixed factors times the chosen residual.
    pub fn assemble(&self, source: ResidualSource) -> Option<IntPolynomial> {
        self.residual(source).map(|r| &self.fixed_product() * r)
    }

    /// The assembled polynomial equals the exact characteristic polynomial
    /// and every fixed multiplicity is exact.
    pub fn verified(&self, source: ResidualSource) -> bool {
        self.fixed_verified() && self.assemble(source).as_ref() == Some(&self.oracle)
    }

    /// Stated multiplicities plus residual degree.
    pub fn eigenvalue_count(&self, source: ResidualSource) -> usize {
        self.fixed
            .iter()
            .map(|f| f.factor.degree().unwrap_or(0) * f.multiplicity)
            .sum::<usize>()
            + self
                .residual(source)
                .and_then(IntPolynomial::degree)
                .unwrap_or(0)
    }

    pub fn to_json(&self, source: ResidualSource) -> ClosedFormJson {
        ClosedFormJson {
            family: self.family,
            fixed: self
                .fixed
                .iter()
                .flat_map(|f| {
                    f.eigenvalues.iter().map(|e| FixedJson {
                        value_expr: e.value_expr.clone(),
                        value_numeric: e.value_numeric,
                        multiplicity: e.multiplicity,
                    })
                })
                .collect(),
            residual: self.residual(source).cloned().unwrap_or_default(),
            residual_source: source,
            printed_residual_matches: self.printed_residual_matches(),
            mismatches: self.mismatches.clone(),
            verified: self.verified(source),
        }
    }
}

fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

fn integer_eigenvalue(v: i64, multiplicity: usize) -> (IntPolynomial, Vec<FixedEigenvalue>) {
    (
        IntPolynomial::linear(v),
        vec![FixedEigenvalue {
            value_expr: v.to_string(),
            value_numeric: v as f64,
            multiplicity,
        }],
    )
}

/// Puts the printed residual, the oracle residual and their differences
/// together.
fn finish(
    family: SpectrumFamily,
    fixed: Vec<(IntPolynomial, usize, Vec<FixedEigenvalue>)>,
    intermediate: Vec<FixedEigenvalue>,
    printed_residual: IntPolynomial,
) -> Result<ClosedFormSpectrum> {
    let spec = family.spec();
    let oracle = charpoly_via_quotient(spec)?;
    let fixed: Vec<FixedFactor> = fixed
        .into_iter()
        .map(|(factor, multiplicity, eigenvalues)| FixedFactor {
            oracle_multiplicity: factor_multiplicity(&oracle, &factor),
            factor,
            multiplicity,
            eigenvalues,
        })
        .collect();
    let product = fixed.iter().fold(IntPolynomial::one(), |acc, f| {
        &acc * &f.factor.pow(f.multiplicity)
    });
    let oracle_residual = oracle.div_exact(&product);
    let printed_residual = printed_residual.primitive_part();
    let mismatches = match &oracle_residual {
        Some(o) => {
            let top = o.degree().max(printed_residual.degree()).unwrap_or(0);
            (0..=top)
                .filter(|&i| o.coeff(i) != printed_residual.coeff(i))
                .map(|i| CoefficientMismatch {
                    degree: i,
                    printed: printed_residual.coeff(i).to_string(),
                    oracle: o.coeff(i).to_string(),
                })
                .collect()
        }
        None => Vec::new(),
    };
    Ok(ClosedFormSpectrum {
        family,
        spec,
        fixed,
        intermediate,
        printed_residual,
        oracle_residual,
        mismatches,
        oracle,
    })
}

fn require_distinct_primes(p: u64, q: u64) -> Result<()> {
    if !is_prime(p) || !is_prime(q) || p == q {
        return Err(Error::Precondition(format!(
            "need distinct primes, got {p} and {q}"
        )));
    }
    Ok(())
}

/// Printed quartic for Z_p x Z_pq, negated to be monic.
pub fn quartic_as_printed(p: u64, q: u64) -> IntPolynomial {
    let (p, q) = (int(p as i64), int(q as i64));
    let one = int(1);
    let qm1sq = (&q - &one) * (&q - &one);
    let p2 = &p * &p;
    let p3 = &p2 * &p;
    let p4 = &p3 * &p;
    let q2 = &q * &q;
    let pq = &p * &q;
    let c3 = &pq - int(4);
    let c2 = &p2 * &q2 - &p2 * &q - &p * &q2 + int(3) * &pq + &p2 + &q - int(7);
    let c1 = -(&p3 * &qm1sq) + int(3) * &p2 * &q2 - int(5) * &p2 * &q - &p * &q2 + int(4) * &p2
        - &q2
        + &pq
        + &p
        + int(5) * &q
        - int(8);
    let c0 =
        -(&p4 * &qm1sq) + int(3) * &p2 * &q2 - int(6) * &p2 * &q - &p * &q2 + &pq + int(4) * &p2
            - &q2
            + int(4) * &q
            - int(4);
    // -x^4 + c3 x^3 + c2 x^2 + c1 x + c0
    -IntPolynomial::new(vec![c0, c1, c2, c3, int(-1)])
}

/// Spectrum of the power graph of Z_p x Z_pq.
pub fn spectrum_prime_by_prime_product(p: u64, q: u64) -> Result<ClosedFormSpectrum> {
    require_distinct_primes(p, q)?;
    let (pi, qi) = (p as i64, q as i64);
    let top = (pi - 1) * qi - 1;
    let minus_one = integer_eigenvalue(-1, (pi * pi * qi - pi - 4) as usize);
    let top_val = integer_eigenvalue(top, p as usize);
    let intermediate = vec![
        minus_one.1[0].clone_with(p as usize),
        top_val.1[0].clone_with(p as usize),
    ];
    finish(
        SpectrumFamily::PrimeByPrimeProduct { p, q },
        vec![
            (minus_one.0, (pi * pi * qi - pi - 4) as usize, minus_one.1),
            (top_val.0, p as usize, top_val.1),
        ],
        intermediate,
        quartic_as_printed(p, q),
    )
}

impl FixedEigenvalue {
    fn clone_with(&self, multiplicity: usize) -> Self {
        Self {
            multiplicity,
            ..self.clone()
        }
    }
}

/// Printed cubic for Z_{p^2} x Z_{p^2}.
pub fn cubic_as_printed(p: u64) -> IntPolynomial {
    let p = p as i64;
    let (p2, p3, p4, p5) = (p * p, p * p * p, p.pow(4), p.pow(5));
    IntPolynomial::from_i64s(&[
        -p5 + p4 - 2 * p2 + p + 1,
        -2 * p4 + 3 * p3 - 4 * p2 + p + 3,
        3 - p2,
        1,
    ])
}

/// Spectrum of the power graph of Z_{p^2} x Z_{p^2}.
pub fn spectrum_prime_squares(p: u64) -> Result<ClosedFormSpectrum> {
    if !is_prime(p) {
        return Err(Error::Precondition(format!("{p} is not prime")));
    }
    let pi = p as i64;
    let p2 = pi * pi;
    let m1 = (p2 * p2 - p2 - 2 * pi - 2) as usize;
    let (f1, e1) = integer_eigenvalue(-1, m1);
    let (f2, e2) = integer_eigenvalue(p2 - pi - 1, (p2 - 1) as usize);
    // the pair (p^2 - 3 +- (p-1) sqrt(5p^2 - 2p + 1)) / 2 are the roots of
    // x^2 - (p^2 - 3) x - (p^4 - 3p^3 + 4p^2 - p - 2)
    let quad =
        IntPolynomial::from_i64s(&[-(p2 * p2 - 3 * p2 * pi + 4 * p2 - pi - 2), -(p2 - 3), 1]);
    let disc = 5 * p2 - 2 * pi + 1;
    let surd = |sign: f64, s: &str| FixedEigenvalue {
        value_expr: format!("({p2} {s} {}*sqrt({disc}) - 3)/2", pi - 1),
        value_numeric: (p2 as f64 + sign * (pi - 1) as f64 * (disc as f64).sqrt() - 3.0) / 2.0,
        multiplicity: p as usize,
    };
    finish(
        SpectrumFamily::PrimeSquares { p },
        vec![
            (f1, m1, e1),
            (f2, (p2 - 1) as usize, e2),
            (quad, p as usize, vec![surd(-1.0, "-"), surd(1.0, "+")]),
        ],
        Vec::new(),
        cubic_as_printed(p),
    )
}

/// The 6x6 determinant whose roots complete the spectrum of Z_{p^2} x Z_pq,
/// expanded with exact rational coefficients and denominators cleared.
pub fn six_by_six_determinant(p: u64, q: u64) -> IntPolynomial {
    let ratio = |k: u64| {
        let f = phi(k) as i64;
        RatPolynomial::affine(f - 1, -1, f)
    };
    let a = ratio(p * p * q);
    let b = ratio(p * p);
    let c = ratio(p * q);
    let d = ratio(p);
    let e = ratio(q);
    let f = RatPolynomial::affine(0, -1, 1);
    let k = RatPolynomial::integer;
    let pi = p as i64;
    let one = k(1);
    let rows = vec![
        vec![&one - &(&a * &b), k(0), -&b, &one - &b, -&b, &one - &b],
        vec![k(1), k(0), c.clone(), k(1), k(1), k(1)],
        vec![k(0), &one - &(&c * &d), k(0), k(0), -&d, &one - &d],
        vec![&one - &a, k(0), k(1 - pi), &d - &k(pi), k(-pi), k(1 - pi)],
        vec![k(1), k(1), k(1), k(0), e, k(1)],
        vec![
            &one - &a,
            &one - &c,
            k(1 - pi),
            k(1 - pi),
            k(1 - 2 * pi),
            &f - &k(2 * pi),
        ],
    ];
    determinant(&rows).clear_denominators()
}

/// Spectrum of the power graph of Z_{p^2} x Z_pq.
pub fn spectrum_prime_square_by_product(p: u64, q: u64) -> Result<ClosedFormSpectrum> {
    require_distinct_primes(p, q)?;
    let (pi, qi) = (p as i64, q as i64);
    let m1 = (pi * pi * pi * qi - 2 * pi - 6) as usize;
    let (f1, e1) = integer_eigenvalue(-1, m1);
    let (f2, e2) = integer_eigenvalue(pi * pi * qi - pi * qi - 1, (pi - 1) as usize);
    let (f3, e3) = integer_eigenvalue(pi * qi - qi - 1, (pi - 1) as usize);
    finish(
        SpectrumFamily::PrimeSquareByProduct { p, q },
        vec![
            (f1, m1, e1),
            (f2, (pi - 1) as usize, e2),
            (f3, (pi - 1) as usize, e3),
        ],
        Vec::new(),
        six_by_six_determinant(p, q),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn golden_group() {
        let s = spectrum_prime_by_prime_product(3, 2).unwrap();
        assert_eq!(s.spec, GroupSpec::new(3, 6).unwrap());
        assert!(s.fixed_verified());
        assert_eq!(s.fixed[0].multiplicity, 11);
        assert_eq!(s.fixed[1].multiplicity, 3);
        assert_eq!(s.fixed[1].eigenvalues[0].value_numeric, 3.0);
        let residual = &(&p(&[3, 1]) * &p(&[-1, 1])) * &p(&[-17, -4, 1]);
        assert_eq!(s.oracle_residual.as_ref(), Some(&residual));
        assert_eq!(s.printed_residual, residual);
        assert!(s.printed_residual_matches());
        assert!(s.verified(ResidualSource::Printed));
        assert_eq!(s.eigenvalue_count(ResidualSource::Oracle), 18);
    }

    #[test]
    fn printed_cubic_small_prime() {
        assert_eq!(cubic_as_printed(2), p(&[-21, -19, -1, 1]));
        let s = spectrum_prime_squares(2).unwrap();
        assert!(s.fixed_verified());
        assert_eq!(s.eigenvalue_count(ResidualSource::Printed), 16);
        let v: Vec<f64> = s.fixed[2]
            .eigenvalues
            .iter()
            .map(|e| e.value_numeric)
            .collect();
        let r = 17f64.sqrt();
        assert!((v[0] - (1.0 - r) / 2.0).abs() < 1e-12 && (v[1] - (1.0 + r) / 2.0).abs() < 1e-12);
    }

    #[test]
    fn determinant_degree() {
        let d = six_by_six_determinant(2, 3);
        assert_eq!(d.degree(), Some(8));
        let s = spectrum_prime_square_by_product(2, 3).unwrap();
        assert_eq!(s.eigenvalue_count(ResidualSource::Printed), 24);
        assert!(s.fixed_verified());
        assert!(s.verified(ResidualSource::Oracle));
    }

    #[test]
    fn mismatches_are_reported() {
        let s = spectrum_prime_square_by_product(2, 3).unwrap();
        assert_eq!(s.printed_residual_matches(), s.mismatches.is_empty());
        let j = serde_json::to_value(s.to_json(ResidualSource::Printed)).unwrap();
        assert_eq!(j["verified"], s.verified(ResidualSource::Printed));
        assert_eq!(j["fixed"].as_array().unwrap().len(), 3);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(spectrum_prime_by_prime_product(2, 2).is_err());
        assert!(spectrum_prime_squares(4).is_err());
        assert!(spectrum_prime_square_by_product(3, 9).is_err());
    }
}
