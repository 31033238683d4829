//! Routes a group to the most specific closed form that applies.

use serde::Serialize;

use super::alpha::{alpha_report, AlphaReport};
use super::spectra::{
    spectrum_prime_by_prime_product, spectrum_prime_square_by_product, spectrum_prime_squares,
    ClosedFormSpectrum, ResidualSource, SpectrumFamily,
};
use crate::charpoly::{charpoly_of_graph, IntPolynomial, QuotientFactorization};
use crate::error::Result;
use crate::group::GroupSpec;
use crate::numtheory::{gcd, is_prime, lcm, prime_power};
use crate::powergraph::PowerGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// gcd(m, n) = 1: the group is cyclic.
    Cyclic,
    /// Explicit spectrum.
    ClosedForm,
    /// Quotient factorization with a closed-form exponent.
    AlphaQuotient,
    /// Quotient factorization without a closed form.
    Quotient,
    /// Full adjacency matrix.
    Dense,
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Cyclic => "cyclic",
            Self::ClosedForm => "closed_form",
            Self::AlphaQuotient => "alpha_quotient",
            Self::Quotient => "quotient",
            Self::Dense => "dense",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Dispatch {
    pub spec: GroupSpec,
    pub method: Method,
    pub charpoly: IntPolynomial,
    pub closed_form: Option<ClosedFormSpectrum>,
    pub alpha: Option<AlphaReport>,
    pub factorization: Option<QuotientFactorization>,
}

/// The explicit-spectrum family of a group, read off its invariant factors
/// `Z_d x Z_l` with `d | l`.
pub fn match_spectrum_family(spec: &GroupSpec) -> Option<SpectrumFamily> {
    let (d, l) = (gcd(spec.m(), spec.n()), lcm(spec.m(), spec.n()));
    if let Some((p, 2)) = prime_power(d) {
        return (l == d).then_some(SpectrumFamily::PrimeSquares { p });
    }
    if !is_prime(d) {
        return None;
    }
    let p = d;
    let rest = l / p;
    if is_prime(rest) && rest != p {
        return Some(SpectrumFamily::PrimeByPrimeProduct { p, q: rest });
    }
    if rest % p == 0 {
        let q = rest / p;
        if is_prime(q) && q != p {
            return Some(SpectrumFamily::PrimeSquareByProduct { p, q });
        }
    }
    None
}

/// The explicit spectrum of a family.
pub fn closed_form_spectrum(family: SpectrumFamily) -> Result<ClosedFormSpectrum> {
    match family {
        SpectrumFamily::PrimeByPrimeProduct { p, q } => spectrum_prime_by_prime_product(p, q),
        SpectrumFamily::PrimeSquares { p } => spectrum_prime_squares(p),
        SpectrumFamily::PrimeSquareByProduct { p, q } => spectrum_prime_square_by_product(p, q),
    }
}

/// Characteristic polynomial through the most specific available route.
///
/// Closed forms are assembled with the residual chosen by `source`; if that
/// does not reproduce a polynomial the quotient route is used instead and
/// the closed form is still attached for inspection.
pub fn dispatch(spec: GroupSpec, source: ResidualSource) -> Dispatch {
    let graph = PowerGraph::build(spec);
    let factorization = QuotientFactorization::of_graph(&graph).ok();
    let quotient_poly = factorization.as_ref().map(QuotientFactorization::expand);
    let alpha = alpha_report(&spec).ok();
    let mut out = Dispatch {
        spec,
        method: Method::Dense,
        charpoly: IntPolynomial::zero(),
        closed_form: None,
        alpha,
        factorization,
    };

    if let Some(family) = match_spectrum_family(&spec) {
        out.closed_form = closed_form_spectrum(family).ok();
        if let Some(cf) = &out.closed_form {
            if cf.verified(source) {
                out.method = Method::ClosedForm;
                out.charpoly = cf.assemble(source).expect("verified spectrum assembles");
                return out;
            }
        }
    }
    match quotient_poly {
        Some(p) => {
            out.method = if gcd(spec.m(), spec.n()) == 1 {
                Method::Cyclic
            } else if out.alpha.is_some() {
                Method::AlphaQuotient
            } else {
                Method::Quotient
            };
            out.charpoly = p;
        }
        None => out.charpoly = charpoly_of_graph(&graph),
    }
    out
}
