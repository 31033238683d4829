//! Per-group invariant checks shared by `verify` and `sweep`.

use pgraph::charpoly::{
    charpoly_bareiss, charpoly_interpolation, charpoly_multimodular, real_roots, x_plus_one_pow,
    QuotientFactorization,
};
use pgraph::formulas::{
    alpha_report, closed_form_spectrum, dispatch, match_spectrum_family, ResidualSource,
};
use pgraph::group::GroupSpec;
use pgraph::partition::verify_equitable;
use pgraph::powergraph::{
    blocks_are_homogeneous, build_adjacency_by_powers, classes_are_cliques, PowerGraph,
};

/// Slower exact routes are only cross-checked up to this many vertices.
const SLOW_ROUTE_LIMIT: u64 = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl Status {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Pass => "pass",
            Self::Fail => "fail",
            Self::Skip => "skip",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Check {
    pub name: &'static str,
    pub status: Status,
    pub detail: String,
}

fn check(name: &'static str, ok: bool, detail: impl Into<String>) -> Check {
    Check {
        name,
        status: if ok { Status::Pass } else { Status::Fail },
        detail: detail.into(),
    }
}

fn skip(name: &'static str, detail: impl Into<String>) -> Check {
    Check {
        name,
        status: Status::Skip,
        detail: detail.into(),
    }
}

#[derive(Debug, Clone)]
pub struct Verification {
    pub spec: GroupSpec,
    pub vertices: usize,
    pub classes: usize,
    pub alpha: usize,
    pub method: &'static str,
    pub checks: Vec<Check>,
}

impl Verification {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }
}

pub fn verify(spec: GroupSpec, source: ResidualSource) -> Verification {
    let g = PowerGraph::build(spec);
    let adj = g.adjacency();
    let part = g.partition();
    let order = spec.order();
    let mut checks = Vec::new();

    checks.push(check(
        "adjacency_symmetric_loopless",
        adj.is_well_formed(),
        "",
    ));
    checks.push(check(
        "construction_by_powers_agrees",
        &build_adjacency_by_powers(&spec) == adj,
        "",
    ));
    checks.push(match verify_equitable(part.classes(), adj) {
        Ok(ok) => check("partition_equitable", ok, ""),
        Err(e) => check("partition_equitable", false, e.to_string()),
    });
    checks.push(check(
        "classes_are_cliques",
        classes_are_cliques(adj, part),
        "",
    ));
    checks.push(check(
        "blocks_homogeneous",
        blocks_are_homogeneous(adj, part),
        "",
    ));

    let direct = charpoly_multimodular(&adj.to_int_matrix());
    let alpha = adj.size() - part.len();
    match QuotientFactorization::of_graph(&g) {
        Ok(f) => checks.push(check(
            "quotient_equals_direct",
            f.expand() == direct,
            format!("alpha={}", f.alpha),
        )),
        Err(e) => checks.push(check("quotient_equals_direct", false, e.to_string())),
    }
    if order <= SLOW_ROUTE_LIMIT {
        let m = adj.to_int_matrix();
        checks.push(check(
            "bareiss_equals_direct",
            charpoly_bareiss(&m) == direct,
            "",
        ));
        checks.push(check(
            "interpolation_equals_direct",
            charpoly_interpolation(&m) == direct,
            "",
        ));
    } else {
        let why = format!("more than {SLOW_ROUTE_LIMIT} vertices");
        checks.push(skip("bareiss_equals_direct", why.clone()));
        checks.push(skip("interpolation_equals_direct", why));
    }
    checks.push(check(
        "x_plus_one_power_divides",
        direct.is_divisible_by(&x_plus_one_pow(alpha)),
        format!("alpha={alpha}"),
    ));
    checks.push(check(
        "trace_zero",
        direct.coeff(adj.size().saturating_sub(1)) == 0.into(),
        "",
    ));
    checks.push(match real_roots(&direct) {
        Ok(roots) => {
            let total: usize = roots.iter().map(|r| r.multiplicity).sum();
            check(
                "real_eigenvalue_count",
                total == adj.size(),
                format!("{total}"),
            )
        }
        Err(e) => check("real_eigenvalue_count", false, e.to_string()),
    });
    checks.push(match alpha_report(&spec) {
        Ok(r) => check(
            "alpha_closed_form",
            r.consistent() && r.closed_form as usize == alpha,
            format!(
                "{} closed={} printed={} generic={}",
                r.pattern.name(),
                r.closed_form,
                r.printed,
                r.generic
            ),
        ),
        Err(_) => skip("alpha_closed_form", "no closed form"),
    });
    checks.push(
        match match_spectrum_family(&spec).map(closed_form_spectrum) {
            Some(Ok(cf)) => check(
                "closed_form_spectrum",
                cf.verified(source) && cf.oracle == direct,
                format!(
                    "{} printed residual mismatches={}",
                    cf.family.name(),
                    cf.mismatches.len()
                ),
            ),
            Some(Err(e)) => check("closed_form_spectrum", false, e.to_string()),
            None => skip("closed_form_spectrum", "no explicit spectrum"),
        },
    );
    let d = dispatch(spec, source);
    checks.push(check(
        "dispatch_equals_direct",
        d.charpoly == direct,
        d.method.name(),
    ));

    Verification {
        spec,
        vertices: adj.size(),
        classes: part.len(),
        alpha,
        method: d.method.name(),
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_groups_pass() {
        for (m, n) in [(1, 1), (3, 6), (4, 4), (4, 6), (2, 3)] {
            let v = verify(GroupSpec::new(m, n).unwrap(), ResidualSource::Oracle);
            assert!(
                v.passed(),
                "{m} {n}: {:?}",
                v.failures().collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn printed_determinant_fails() {
        let v = verify(GroupSpec::new(4, 6).unwrap(), ResidualSource::Printed);
        let failed: Vec<_> = v.failures().map(|c| c.name).collect();
        assert_eq!(failed, vec!["closed_form_spectrum"]);
    }
}
