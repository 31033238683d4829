//! Real root isolation: square-free decomposition, Sturm sequences and
//! exact dyadic bisection.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::poly::IntPolynomial;
use crate::error::{Error, Result};
use crate::numtheory::divisors;

/// Bisection stops once an isolating interval is narrower than 2^-PRECISION_BITS.
const PRECISION_BITS: u64 = 45;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RealRoot {
    pub approx: f64,
    pub multiplicity: usize,
    /// Set when the root is rational.
    #[serde(skip)]
    pub exact: Option<BigRational>,
}

impl RealRoot {
    pub fn is_integer(&self) -> bool {
        self.exact.as_ref().is_some_and(|r| r.is_integer())
    }
}

/// All distinct real roots in ascending order with their multiplicities.
pub fn real_roots(p: &IntPolynomial) -> Result<Vec<RealRoot>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = Vec::new();
    for (factor, mult) in p.square_free_decomposition() {
        for mut r in simple_real_roots(&factor) {
            r.multiplicity = mult;
            out.push(r);
        }
    }
    out.sort_by(|a, b| a.approx.total_cmp(&b.approx));
    Ok(out)
}

/// Roots of a square-free polynomial, each with multiplicity 1.
pub fn simple_real_roots(f: &IntPolynomial) -> Vec<RealRoot> {
    if f.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let sturm = SturmSequence::new(f);
    let e = root_bound_exponent(f);
    // dyadic interval (lo/2^k, hi/2^k]
    let mut stack = vec![(BigInt::from(-1) << e, BigInt::one() << e, 0u64)];
    let mut found = Vec::new();
    while let Some((lo, hi, k)) = stack.pop() {
        let count = sturm.count(&lo, &hi, k);
        if count == 0 {
            continue;
        }
        if count == 1 {
            found.push(refine(f, &sturm, lo, hi, k));
            continue;
        }
        let (lo, hi, k) = (lo << 1, hi << 1, k + 1);
        let mid: BigInt = (&lo + &hi) >> 1;
        stack.push((lo, mid.clone(), k));
        stack.push((mid, hi, k));
    }
    found.sort_by(|a, b| a.approx.total_cmp(&b.approx));
    found
}

/// Smallest `e` with every root strictly inside `(-2^e, 2^e)` (Cauchy bound).
fn root_bound_exponent(f: &IntPolynomial) -> u64 {
    let lc = f.leading().expect("nonzero").abs();
    let max = f
        .coefficients()
        .iter()
        .map(|c| c.abs())
        .max()
        .expect("nonzero");
    // 1 + max|a_i| / |lc| <= 1 + max|a_i|
    let bound = BigInt::one() + max.div_ceil(&lc);
    bound.bits() + 1
}

fn sign(v: &BigInt) -> i8 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

fn sign_at(f: &IntPolynomial, num: &BigInt, k: u64) -> i8 {
    sign(&f.eval_homogeneous(num, &(BigInt::one() << k)))
}

struct SturmSequence {
    seq: Vec<IntPolynomial>,
}

impl SturmSequence {
    fn new(f: &IntPolynomial) -> Self {
        let mut seq = vec![f.clone(), f.derivative()];
        loop {
            let n = seq.len();
            let r = seq[n - 2].signed_pseudo_rem(&seq[n - 1]);
            if r.is_zero() {
                break;
            }
            // dividing by the positive content keeps the sign pattern
            let c = r.content();
            seq.push(IntPolynomial::new(
                r.coefficients().iter().map(|a| -(a / &c)).collect(),
            ));
        }
        Self { seq }
    }

    fn variations(&self, num: &BigInt, k: u64) -> usize {
        let den = BigInt::one() << k;
        let mut last = 0i8;
        let mut changes = 0;
        for s in &self.seq {
            let v = sign(&s.eval_homogeneous(num, &den));
            if v != 0 {
                if last != 0 && v != last {
                    changes += 1;
                }
                last = v;
            }
        }
        changes
    }

    /// Distinct roots in `(lo/2^k, hi/2^k]`.
    fn count(&self, lo: &BigInt, hi: &BigInt, k: u64) -> usize {
        self.variations(lo, k) - self.variations(hi, k)
    }
}

/// Narrows an interval holding exactly one root of the square-free `f`.
fn refine(
    f: &IntPolynomial,
    sturm: &SturmSequence,
    mut lo: BigInt,
    mut hi: BigInt,
    mut k: u64,
) -> RealRoot {
    if sign_at(f, &hi, k) == 0 {
        return exact_dyadic(hi, k);
    }
    // move the left end off any neighbouring root
    while sign_at(f, &lo, k) == 0 {
        lo <<= 1;
        hi <<= 1;
        k += 1;
        let mid = (&lo + &hi) >> 1;
        if sturm.count(&lo, &mid, k) == 0 {
            lo = mid;
        } else if sign_at(f, &mid, k) == 0 {
            return exact_dyadic(mid, k);
        } else {
            hi = mid;
        }
    }
    let s_lo = sign_at(f, &lo, k);
    while ((&hi - &lo) << PRECISION_BITS) >= (BigInt::one() << k) {
        lo <<= 1;
        hi <<= 1;
        k += 1;
        let mid = (&lo + &hi) >> 1;
        match sign_at(f, &mid, k) {
            0 => return exact_dyadic(mid, k),
            s if s == s_lo => lo = mid,
            _ => hi = mid,
        }
    }
    let approx = dyadic_to_f64(&(&lo + &hi), k + 1);
    RealRoot {
        approx,
        multiplicity: 1,
        exact: rational_near(f, approx),
    }
}

fn exact_dyadic(num: BigInt, k: u64) -> RealRoot {
    let r = BigRational::new(num, BigInt::one() << k);
    RealRoot {
        approx: r.to_f64().unwrap_or(f64::NAN),
        multiplicity: 1,
        exact: Some(r),
    }
}

fn dyadic_to_f64(num: &BigInt, k: u64) -> f64 {
    BigRational::new(num.clone(), BigInt::one() << k)
        .to_f64()
        .unwrap_or(f64::NAN)
}

/// A rational root `a/b` of `f` close to `x`, with `b` dividing the leading
/// coefficient (skipped for huge leading coefficients).
fn rational_near(f: &IntPolynomial, x: f64) -> Option<BigRational> {
    let lc = f.leading()?.abs();
    let dens: Vec<u64> = match lc.to_u64() {
        Some(v) if v <= 1_000_000 => divisors(v).ok()?,
        _ => vec![1],
    };
    for d in dens {
        let num = (x * d as f64).round();
        if !num.is_finite() || (num / d as f64 - x).abs() > 1e-9 {
            continue;
        }
        let num = BigInt::from(num as i128);
        let den = BigInt::from(d);
        if f.eval_homogeneous(&num, &den).is_zero() {
            return Some(BigRational::new(num, den));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn repeated_integer_root() {
        let r = real_roots(&p(&[1, 1]).pow(3)).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].multiplicity, 3);
        assert_eq!(r[0].exact, Some(BigRational::from_integer((-1).into())));
    }

    #[test]
    fn quadratic_surds() {
        let r = real_roots(&p(&[-17, -4, 1])).unwrap();
        let s = 21f64.sqrt();
        assert_eq!(r.len(), 2);
        assert!((r[0].approx - (2.0 - s)).abs() < 1e-12);
        assert!((r[1].approx - (2.0 + s)).abs() < 1e-12);
        assert!(r.iter().all(|x| x.exact.is_none() && x.multiplicity == 1));

        let r = real_roots(&p(&[-2, 0, 1])).unwrap();
        assert!((r[0].approx + 2f64.sqrt()).abs() < 1e-12);
        assert!((r[1].approx - 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn no_real_roots() {
        assert!(real_roots(&p(&[1, 0, 1])).unwrap().is_empty());
        assert!(real_roots(&p(&[5])).unwrap().is_empty());
        assert_eq!(
            real_roots(&IntPolynomial::zero()),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn rational_and_close_roots() {
        // (2x - 1)(x - 1)(x - 1 - 1/1000) scaled: (2x-1)(x-1)(1000x-1001)
        let f = &(&p(&[-1, 2]) * &p(&[-1, 1])) * &p(&[-1001, 1000]);
        let r = real_roots(&f).unwrap();
        assert_eq!(r.len(), 3);
        assert_eq!(r[0].exact, Some(BigRational::new(1.into(), 2.into())));
        assert_eq!(r[1].exact, Some(BigRational::from_integer(1.into())));
        assert_eq!(r[2].exact, Some(BigRational::new(1001.into(), 1000.into())));
    }

    #[test]
    fn adjacent_integer_roots() {
        // roots at 0, 1, 2, 3 exercise endpoint handling
        let f = (0..4).fold(IntPolynomial::one(), |acc, r| {
            &acc * &IntPolynomial::linear(r)
        });
        let r = real_roots(&f).unwrap();
        let got: Vec<f64> = r.iter().map(|x| x.approx).collect();
        assert_eq!(got, vec![0.0, 1.0, 2.0, 3.0]);
        assert!(r.iter().all(RealRoot::is_integer));
    }

    proptest! {
        #[test]
        fn integer_roots_found(roots in prop::collection::vec(-30i64..30, 1..8)) {
            let f = roots.iter().fold(IntPolynomial::one(), |acc, &r| &acc * &IntPolynomial::linear(r));
            let found = real_roots(&f).unwrap();
            let total: usize = found.iter().map(|r| r.multiplicity).sum();
            prop_assert_eq!(total, roots.len());
            let mut distinct = roots.clone();
            distinct.sort_unstable();
            distinct.dedup();
            let got: Vec<i64> = found.iter().map(|r| r.approx.round() as i64).collect();
            prop_assert_eq!(got, distinct);
            prop_assert!(found.iter().all(RealRoot::is_integer));
        }

        #[test]
        fn quadratic_roots_accurate(b in -50i64..50, c in -50i64..50) {
            let f = p(&[c, b, 1]);
            let disc = (b * b - 4 * c) as f64;
            let found = real_roots(&f).unwrap();
            let total: usize = found.iter().map(|r| r.multiplicity).sum();
            if disc < 0.0 {
                prop_assert_eq!(total, 0);
            } else {
                prop_assert_eq!(total, 2);
                let hi = (-(b as f64) + disc.sqrt()) / 2.0;
                prop_assert!((found.last().unwrap().approx - hi).abs() < 1e-10);
            }
        }
    }
}
