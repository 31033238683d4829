//! Characteristic polynomials by the method chosen on the command line.

use pgraph::charpoly::{charpoly_of_graph, x_plus_one_pow, IntPolynomial, QuotientFactorization};
use pgraph::formulas::{
    alpha_report, closed_form_spectrum, dispatch, match_spectrum_family, AlphaReport,
    ClosedFormSpectrum, Method as Route, ResidualSource,
};
use pgraph::group::GroupSpec;
use pgraph::powergraph::PowerGraph;
use pgraph::Error;

use crate::args::{Method, Residual};

pub fn residual_source(r: Residual) -> ResidualSource {
    match r {
        Residual::Oracle => ResidualSource::Oracle,
        Residual::Printed => ResidualSource::Printed,
    }
}

#[derive(Debug, Clone)]
pub struct Computed {
    pub method: &'static str,
    pub poly: IntPolynomial,
    /// Factors when the method produces them.
    pub factors: Vec<(IntPolynomial, usize)>,
    pub factorization: Option<QuotientFactorization>,
    pub closed_form: Option<ClosedFormSpectrum>,
    pub alpha: Option<AlphaReport>,
    /// `Some(false)` when a closed form does not reproduce the exact polynomial.
    pub verified: Option<bool>,
}

impl Computed {
    fn plain(method: &'static str, poly: IntPolynomial) -> Self {
        Self {
            method,
            poly,
            factors: Vec::new(),
            factorization: None,
            closed_form: None,
            alpha: None,
            verified: None,
        }
    }
}

fn quotient_factors(f: &QuotientFactorization) -> Vec<(IntPolynomial, usize)> {
    let mut out = Vec::new();
    if f.alpha > 0 {
        out.push((x_plus_one_pow(1), f.alpha));
    }
    out.push((f.quotient_charpoly.clone(), 1));
    out
}

fn closed_form_factors(
    cf: &ClosedFormSpectrum,
    source: ResidualSource,
) -> Vec<(IntPolynomial, usize)> {
    let mut out: Vec<_> = cf
        .fixed
        .iter()
        .map(|f| (f.factor.clone(), f.multiplicity))
        .collect();
    if let Some(r) = cf.residual(source) {
        out.push((r.clone(), 1));
    }
    out
}

pub fn compute(spec: GroupSpec, method: Method, residual: Residual) -> pgraph::Result<Computed> {
    let source = residual_source(residual);
    match method {
        Method::Direct => Ok(Computed::plain(
            "direct",
            charpoly_of_graph(&PowerGraph::build(spec)),
        )),
        Method::Quotient => {
            let f = QuotientFactorization::of_graph(&PowerGraph::build(spec))?;
            Ok(Computed {
                factors: quotient_factors(&f),
                poly: f.expand(),
                factorization: Some(f),
                alpha: alpha_report(&spec).ok(),
                ..Computed::plain("quotient", IntPolynomial::zero())
            })
        }
        Method::Auto => {
            let d = dispatch(spec, source);
            let factors = match (&d.method, &d.closed_form, &d.factorization) {
                (Route::ClosedForm, Some(cf), _) => closed_form_factors(cf, source),
                (Route::Dense, _, _) => Vec::new(),
                (_, _, Some(f)) => quotient_factors(f),
                _ => Vec::new(),
            };
            Ok(Computed {
                method: d.method.name(),
                verified: d.closed_form.as_ref().map(|cf| cf.verified(source)),
                poly: d.charpoly,
                factors,
                factorization: d.factorization,
                closed_form: d.closed_form,
                alpha: d.alpha,
            })
        }
        Method::Formula => {
            if let Some(family) = match_spectrum_family(&spec) {
                let cf = closed_form_spectrum(family)?;
                let poly = cf.assemble(source).ok_or_else(|| {
                    Error::InexactDivision(format!("fixed factors do not divide for {spec}"))
                })?;
                return Ok(Computed {
                    method: "closed_form",
                    factors: closed_form_factors(&cf, source),
                    verified: Some(cf.verified(source)),
                    poly,
                    closed_form: Some(cf),
                    ..Computed::plain("closed_form", IntPolynomial::zero())
                });
            }
            let report = alpha_report(&spec)?;
            let f = QuotientFactorization::of_graph(&PowerGraph::build(spec))?;
            Ok(Computed {
                method: "alpha_quotient",
                factors: quotient_factors(&f),
                poly: f.expand(),
                verified: Some(report.consistent() && report.closed_form as usize == f.alpha),
                factorization: Some(f),
                alpha: Some(report),
                ..Computed::plain("alpha_quotient", IntPolynomial::zero())
            })
        }
    }
}
