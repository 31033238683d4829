mod common;

use common::oracle_charpoly;
use pgraph::charpoly::{charpoly_dense, charpoly_via_quotient, real_roots, IntPolynomial};
use pgraph::formulas::*;
use pgraph::group::GroupSpec;
use pgraph::powergraph::build_adjacency;

fn spec(m: u64, n: u64) -> GroupSpec {
    GroupSpec::new(m, n).unwrap()
}

#[test]
fn library_routes_match_naive_oracle() {
    for (m, n) in [
        (1, 1),
        (2, 2),
        (3, 6),
        (2, 6),
        (4, 4),
        (4, 6),
        (2, 10),
        (6, 6),
        (1, 12),
    ] {
        let expect = oracle_charpoly(m, n);
        assert_eq!(
            charpoly_via_quotient(spec(m, n)).unwrap(),
            expect,
            "{m} {n}"
        );
        assert_eq!(
            charpoly_dense(&build_adjacency(&spec(m, n)).to_int_matrix()),
            expect
        );
    }
}

#[test]
fn dispatcher_is_sound() {
    for m in 1..=150u64 {
        for n in 1..=(150 / m) {
            let s = spec(m, n);
            let d = dispatch(s, ResidualSource::Oracle);
            let dense = charpoly_dense(&build_adjacency(&s).to_int_matrix());
            assert_eq!(d.charpoly, dense, "{s} via {}", d.method.name());
        }
    }
}

#[test]
fn dispatcher_examples() {
    let d = dispatch(spec(3, 6), ResidualSource::Oracle);
    assert_eq!(d.method, Method::ClosedForm);
    assert_eq!(
        d.closed_form.unwrap().family,
        SpectrumFamily::PrimeByPrimeProduct { p: 3, q: 2 }
    );
    assert_eq!(
        dispatch(spec(2, 3), ResidualSource::Oracle).method,
        Method::Cyclic
    );
    let d = dispatch(spec(4, 6), ResidualSource::Oracle);
    assert_eq!(
        d.closed_form.unwrap().family,
        SpectrumFamily::PrimeSquareByProduct { p: 2, q: 3 }
    );
    // the printed determinant does not reproduce the polynomial, so the
    // dispatcher falls back to the quotient route
    let d = dispatch(spec(4, 6), ResidualSource::Printed);
    assert_eq!(d.method, Method::AlphaQuotient);
    assert_eq!(d.charpoly, oracle_charpoly(4, 6));
}

fn check_against_naive(s: &ClosedFormSpectrum) {
    let (m, n) = (s.spec.m(), s.spec.n());
    assert_eq!(s.oracle, oracle_charpoly(m, n), "{}", s.spec);
    assert!(s.fixed_verified(), "{}", s.spec);
    assert!(s.verified(ResidualSource::Oracle), "{}", s.spec);
    assert_eq!(s.eigenvalue_count(ResidualSource::Oracle), (m * n) as usize);
}

#[test]
fn prime_by_prime_product_spectra() {
    for (p, q) in [(2, 3), (3, 2), (2, 5), (5, 2)] {
        let s = spectrum_prime_by_prime_product(p, q).unwrap();
        check_against_naive(&s);
        assert!(s.printed_residual_or_flagged());
    }
    let s = spectrum_prime_by_prime_product(3, 2).unwrap();
    let roots = real_roots(s.oracle_residual.as_ref().unwrap()).unwrap();
    let r21 = 21f64.sqrt();
    let expect = [-3.0, 2.0 - r21, 1.0, 2.0 + r21];
    for (r, e) in roots.iter().zip(expect) {
        assert!((r.approx - e).abs() < 1e-9);
    }
    assert_eq!(s.intermediate.len(), 2);
    assert_eq!(s.intermediate[1].value_numeric, 3.0);
}

trait Flagged {
    fn printed_residual_or_flagged(&self) -> bool;
}

impl Flagged for ClosedFormSpectrum {
    /// Either the printed residual is right or every wrong coefficient is listed.
    fn printed_residual_or_flagged(&self) -> bool {
        let o = self.oracle_residual.as_ref().unwrap();
        let wrong = (0..=8)
            .filter(|&i| o.coeff(i) != self.printed_residual.coeff(i))
            .count();
        wrong == self.mismatches.len()
    }
}

#[test]
fn printed_quartic_and_cubic_hold_more_widely() {
    for (p, q) in [(2, 7), (7, 2), (3, 5), (5, 3), (3, 7), (2, 11)] {
        let s = spectrum_prime_by_prime_product(p, q).unwrap();
        assert!(s.verified(ResidualSource::Printed), "{p} {q}");
    }
    for p in [2, 3, 5] {
        let s = spectrum_prime_squares(p).unwrap();
        assert!(s.verified(ResidualSource::Printed), "{p}");
    }
}

#[test]
fn prime_squares_spectra() {
    let s = spectrum_prime_squares(2).unwrap();
    check_against_naive(&s);
    assert_eq!(
        s.printed_residual,
        IntPolynomial::from_i64s(&[-21, -19, -1, 1])
    );
    let s = spectrum_prime_squares(3).unwrap();
    assert_eq!(
        s.oracle,
        charpoly_dense(&build_adjacency(&spec(9, 9)).to_int_matrix())
    );
    assert!(s.verified(ResidualSource::Oracle));
    let surds: Vec<f64> = s.fixed[2]
        .eigenvalues
        .iter()
        .map(|e| e.value_numeric)
        .collect();
    let d = 40f64.sqrt();
    assert!((surds[0] - (9.0 - 2.0 * d - 3.0) / 2.0).abs() < 1e-12);
    assert!((surds[1] - (9.0 + 2.0 * d - 3.0) / 2.0).abs() < 1e-12);
}

#[test]
fn prime_square_by_product_spectra() {
    for (p, q) in [(2, 3), (3, 2)] {
        let s = spectrum_prime_square_by_product(p, q).unwrap();
        check_against_naive(&s);
        assert_eq!(s.fixed[0].multiplicity as u64, p * p * p * q - 2 * p - 6);
        assert_eq!(s.printed_residual.degree(), Some(8));
        assert!(s.printed_residual_or_flagged());
        // the determinant as printed does not give the remaining eigenvalues
        assert!(!s.verified(ResidualSource::Printed));
        assert_eq!(s.mismatches.len(), 8);
    }
}
