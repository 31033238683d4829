//! Spectra assembled from a characteristic polynomial.

use num_traits::ToPrimitive;
use serde::Serialize;

use super::poly::IntPolynomial;
use super::roots::{simple_real_roots, RealRoot};
use crate::error::{Error, Result};

/// One square-free factor with its multiplicity and numeric roots.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumEntry {
    pub factor: IntPolynomial,
    pub multiplicity: usize,
    /// Roots of `factor`; each is simple within the factor.
    pub roots: Vec<RealRoot>,
}

impl SpectrumEntry {
    /// The integer eigenvalue when the factor is `x - r`.
    pub fn integer_root(&self) -> Option<i64> {
        if self.factor.degree() == Some(1) && self.factor.is_monic() {
            (-self.factor.coeff(0)).to_i64()
        } else {
            None
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumReport {
    pub entries: Vec<SpectrumEntry>,
    pub total: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorJson {
    pub factor_coefficients: IntPolynomial,
    pub multiplicity: usize,
}

impl SpectrumReport {
    /// Square-free decomposition of a monic polynomial with every integer
    /// root split off as its own linear factor.
    pub fn from_charpoly(p: &IntPolynomial) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !p.is_monic() {
            return Err(Error::Precondition(
                "spectrum needs a monic polynomial".into(),
            ));
        }
        let mut linear = Vec::new();
        let mut rest = Vec::new();
        for (factor, multiplicity) in p.square_free_decomposition() {
            let roots = simple_real_roots(&factor);
            let mut remaining = factor;
            for r in &roots {
                let Some(v) = r.exact.as_ref().filter(|x| x.is_integer()) else {
                    continue;
                };
                let v = v
                    .to_integer()
                    .to_i64()
                    .expect("integer eigenvalue fits in i64");
                let lin = IntPolynomial::linear(v);
                remaining = remaining.div_exact(&lin).expect("integer root divides");
                linear.push(SpectrumEntry {
                    factor: lin,
                    multiplicity,
                    roots: vec![r.clone()],
                });
            }
            if remaining.degree().unwrap_or(0) > 0 {
                let roots = roots.into_iter().filter(|r| !r.is_integer()).collect();
                rest.push(SpectrumEntry {
                    factor: remaining,
                    multiplicity,
                    roots,
                });
            }
        }
        linear.sort_by_key(|e| e.integer_root());
        rest.sort_by(|a, b| {
            (a.factor.degree(), a.multiplicity, a.factor.coefficients()).cmp(&(
                b.factor.degree(),
                b.multiplicity,
                b.factor.coefficients(),
            ))
        });
        linear.extend(rest);
        Ok(Self {
            entries: linear,
            total: p.degree().unwrap_or(0),
        })
    }

    /// Product of `factor^multiplicity` over all entries.
    pub fn assemble(&self) -> IntPolynomial {
        self.entries.iter().fold(IntPolynomial::one(), |acc, e| {
            &acc * &e.factor.pow(e.multiplicity)
        })
    }

    /// Sum of `degree * multiplicity`.
    pub fn counted(&self) -> usize {
        self.entries
            .iter()
            .map(|e| e.factor.degree().unwrap_or(0) * e.multiplicity)
            .sum()
    }

    /// Multiplicity of the integer eigenvalue `v` (zero when absent).
    pub fn multiplicity_of(&self, v: i64) -> usize {
        self.entries
            .iter()
            .filter(|e| e.integer_root() == Some(v))
            .map(|e| e.multiplicity)
            .sum()
    }

    /// All real eigenvalues, ascending, with multiplicities.
    pub fn eigenvalues(&self) -> Vec<(f64, usize)> {
        let mut out: Vec<(f64, usize)> = self
            .entries
            .iter()
            .flat_map(|e| e.roots.iter().map(move |r| (r.approx, e.multiplicity)))
            .collect();
        out.sort_by(|a, b| a.0.total_cmp(&b.0));
        out
    }

    pub fn factored_json(&self) -> Vec<FactorJson> {
        self.entries
            .iter()
            .map(|e| FactorJson {
                factor_coefficients: e.factor.clone(),
                multiplicity: e.multiplicity,
            })
            .collect()
    }
}

/// The polynomial obtained by dividing `p` by `factor^k`, if exact.
pub fn strip_factor(p: &IntPolynomial, factor: &IntPolynomial, k: usize) -> Option<IntPolynomial> {
    p.div_exact(&factor.pow(k))
}

/// Largest `k` with `factor^k | p`.
pub fn factor_multiplicity(p: &IntPolynomial, factor: &IntPolynomial) -> usize {
    let mut k = 0;
    let mut cur = p.clone();
    while !cur.is_zero() {
        match cur.div_exact(factor) {
            Some(q) => {
                cur = q;
                k += 1;
            }
            None => break,
        }
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn golden_factorisation() {
        // (x+1)^11 (x-3)^3 (x+3)(x-1)(x^2-4x-17)
        let f = [
            p(&[1, 1]).pow(11),
            p(&[-3, 1]).pow(3),
            p(&[3, 1]),
            p(&[-1, 1]),
            p(&[-17, -4, 1]),
        ]
        .iter()
        .fold(IntPolynomial::one(), |a, b| &a * b);
        let r = SpectrumReport::from_charpoly(&f).unwrap();
        assert_eq!(r.total, 18);
        assert_eq!(r.counted(), 18);
        assert_eq!(r.assemble(), f);
        assert_eq!(r.multiplicity_of(-1), 11);
        assert_eq!(r.multiplicity_of(3), 3);
        assert_eq!(r.multiplicity_of(-3), 1);
        assert_eq!(r.multiplicity_of(1), 1);
        let quad = r
            .entries
            .iter()
            .find(|e| e.factor.degree() == Some(2))
            .unwrap();
        assert_eq!(quad.factor, p(&[-17, -4, 1]));
        let eig = r.eigenvalues();
        assert_eq!(eig.iter().map(|e| e.1).sum::<usize>(), 18);
        assert!((eig[0].0 + 3.0).abs() < 1e-12);
    }

    #[test]
    fn multiplicity_helpers() {
        let f = &p(&[1, 1]).pow(4) * &p(&[0, 1]);
        assert_eq!(factor_multiplicity(&f, &p(&[1, 1])), 4);
        assert_eq!(strip_factor(&f, &p(&[1, 1]), 4), Some(p(&[0, 1])));
        assert_eq!(strip_factor(&f, &p(&[1, 1]), 5), None);
    }

    #[test]
    fn rejects_non_monic() {
        assert!(SpectrumReport::from_charpoly(&p(&[1, 2])).is_err());
        assert!(SpectrumReport::from_charpoly(&IntPolynomial::zero()).is_err());
    }
}
