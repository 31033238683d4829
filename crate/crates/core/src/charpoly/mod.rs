//! Exact characteristic polynomials of power graphs and their spectra.

mod dense;
mod poly;
mod qpoly;
mod roots;
mod spectrum;

pub use dense::{
    charpoly_bareiss, charpoly_dense, charpoly_interpolation, charpoly_multimodular, det_bareiss,
    interpolate_at_naturals,
};
pub use poly::IntPolynomial;
pub use qpoly::{determinant, RatPolynomial};
pub use roots::{real_roots, simple_real_roots, RealRoot};
pub use spectrum::{factor_multiplicity, strip_factor, FactorJson, SpectrumEntry, SpectrumReport};

use crate::error::Result;
use crate::group::GroupSpec;
use crate::matrix::IntMatrix;
use crate::partition::{quotient_matrix, QuotientMatrix};
use crate::powergraph::PowerGraph;

/// Quotient matrices up to this size go through Bareiss over Z[x].
const BAREISS_LIMIT: usize = 24;

pub fn poly_mul(p: &IntPolynomial, q: &IntPolynomial) -> IntPolynomial {
    p * q
}

/// `(x + 1)^alpha`.
pub fn x_plus_one_pow(alpha: usize) -> IntPolynomial {
    IntPolynomial::from_i64s(&[1, 1]).pow(alpha)
}

/// Characteristic polynomial of a small matrix, picking the cheaper exact route.
pub fn charpoly_small(m: &IntMatrix) -> IntPolynomial {
    if m.size() <= BAREISS_LIMIT {
        charpoly_bareiss(m)
    } else {
        charpoly_multimodular(m)
    }
}

/// `psi(A) = (x + 1)^alpha * psi(Q)` for the generator-class partition.
#[derive(Debug, Clone, PartialEq)]
pub struct QuotientFactorization {
    pub alpha: usize,
    pub quotient: QuotientMatrix,
    pub quotient_charpoly: IntPolynomial,
}

impl QuotientFactorization {
    pub fn of_graph(g: &PowerGraph) -> Result<Self> {
        let quotient = quotient_matrix(g.partition(), g.adjacency())?;
        let alpha = g.adjacency().size() - quotient.size();
        let quotient_charpoly = charpoly_small(quotient.matrix());
        Ok(Self {
            alpha,
            quotient,
            quotient_charpoly,
        })
    }

    pub fn expand(&self) -> IntPolynomial {
        &x_plus_one_pow(self.alpha) * &self.quotient_charpoly
    }
}

pub fn charpoly_via_quotient(spec: GroupSpec) -> Result<IntPolynomial> {
    Ok(QuotientFactorization::of_graph(&PowerGraph::build(spec))?.expand())
}

/// Dense characteristic polynomial of the full adjacency matrix.
pub fn charpoly_of_graph(g: &PowerGraph) -> IntPolynomial {
    charpoly_dense(&g.adjacency().to_int_matrix())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(m: u64, n: u64) -> GroupSpec {
        GroupSpec::new(m, n).unwrap()
    }

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn golden_group() {
        let expect = [
            p(&[1, 1]).pow(11),
            p(&[-3, 1]).pow(3),
            p(&[3, 1]),
            p(&[-1, 1]),
            p(&[-17, -4, 1]),
        ]
        .iter()
        .fold(IntPolynomial::one(), |a, b| &a * b);
        let g = PowerGraph::build(spec(3, 6));
        let f = QuotientFactorization::of_graph(&g).unwrap();
        assert_eq!(f.alpha, 8);
        assert_eq!(f.expand(), expect);
        assert_eq!(charpoly_of_graph(&g), expect);
    }

    #[test]
    fn cyclic_prime_is_complete() {
        for q in [2i64, 3, 5, 7] {
            let expect = &p(&[-(q - 1), 1]) * &p(&[1, 1]).pow(q as usize - 1);
            assert_eq!(charpoly_via_quotient(spec(1, q as u64)).unwrap(), expect);
        }
    }

    #[test]
    fn star() {
        assert_eq!(
            charpoly_via_quotient(spec(2, 2)).unwrap(),
            p(&[0, 0, -3, 0, 1])
        );
        let g = PowerGraph::build(spec(2, 2));
        assert_eq!(QuotientFactorization::of_graph(&g).unwrap().alpha, 0);
    }

    #[test]
    fn poly_mul_example() {
        assert_eq!(
            poly_mul(&p(&[-17, -4, 1]), &p(&[-1, 1])),
            p(&[17, -13, -5, 1])
        );
    }

    #[test]
    fn small_groups_agree_with_all_routes() {
        for (m, n) in [(1, 1), (2, 4), (3, 3), (2, 6), (4, 4)] {
            let g = PowerGraph::build(spec(m, n));
            let a = g.adjacency().to_int_matrix();
            let dense = charpoly_dense(&a);
            assert_eq!(dense, charpoly_bareiss(&a));
            assert_eq!(dense, charpoly_interpolation(&a));
            assert_eq!(dense, charpoly_via_quotient(spec(m, n)).unwrap());
        }
    }
}
