//! Characteristic polynomials `det(xI - M)` of dense integer matrices.
//!
//! Three independent routes are provided. `charpoly_dense` uses the
//! multi-modular one; the others serve as cross-checks and for small inputs.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::IntPolynomial;
use crate::matrix::IntMatrix;
use crate::numtheory::is_prime;

/// Exact characteristic polynomial. Monic of degree `M.size()`.
pub fn charpoly_dense(m: &IntMatrix) -> IntPolynomial {
    charpoly_multimodular(m)
}

/// Fraction-free Bareiss elimination on `xI - M` over Z[x].
///
/// Every leading principal minor of `xI - M` is monic, so no pivoting is
/// ever needed and every division is exact.
pub fn charpoly_bareiss(m: &IntMatrix) -> IntPolynomial {
    let n = m.size();
    if n == 0 {
        return IntPolynomial::one();
    }
    let mut a: Vec<Vec<IntPolynomial>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = BigInt::from(-m.get(i, j));
                    if i == j {
                        IntPolynomial::new(vec![c, BigInt::one()])
                    } else {
                        IntPolynomial::constant(c)
                    }
                })
                .collect()
        })
        .collect();
    let mut prev = IntPolynomial::one();
    for k in 0..n - 1 {
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev).expect("Bareiss step divides exactly");
            }
        }
        prev = a[k][k].clone();
    }
    a[n - 1][n - 1].clone()
}

/// Determinant of an integer matrix by Bareiss with row pivoting.
pub fn det_bareiss(rows: &[Vec<BigInt>]) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = rows.to_vec();
    let mut sign = 1;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[k][k] * &a[i][j] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    if sign < 0 {
        -prev
    } else {
        prev
    }
}

/// Evaluates `det(tI - M)` at `t = 0..=n` and interpolates.
pub fn charpoly_interpolation(m: &IntMatrix) -> IntPolynomial {
    let n = m.size();
    let values: Vec<BigInt> = (0..=n as i64)
        .map(|t| {
            let rows: Vec<Vec<BigInt>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            let d = if i == j { t } else { 0 };
                            BigInt::from(d - m.get(i, j))
                        })
                        .collect()
                })
                .collect();
            det_bareiss(&rows)
        })
        .collect();
    interpolate_at_naturals(&values)
}

/// The unique polynomial of degree `<= k` through `(i, y_i)` for `i = 0..=k`.
pub fn interpolate_at_naturals(y: &[BigInt]) -> IntPolynomial {
    let k = y.len().saturating_sub(1);
    if y.is_empty() {
        return IntPolynomial::zero();
    }
    // W(x) = prod_{j=0..k} (x - j)
    let w = (0..=k as i64).fold(IntPolynomial::one(), |acc, j| {
        &acc * &IntPolynomial::linear(j)
    });
    let mut acc = vec![BigInt::zero(); k + 1];
    let mut binom = BigInt::one();
    for (i, yi) in y.iter().enumerate() {
        if i > 0 {
            binom = binom * BigInt::from(k - i + 1) / BigInt::from(i);
        }
        let mut weight = &binom * yi;
        if (k - i) % 2 == 1 {
            weight = -weight;
        }
        if weight.is_zero() {
            continue;
        }
        // W(x) / (x - i) by synthetic division
        let wc = w.coefficients();
        let mut carry = BigInt::zero();
        let root = BigInt::from(i);
        for d in (0..=k).rev() {
            carry = &carry * &root + &wc[d + 1];
            acc[d] += &weight * &carry;
        }
    }
    let fact: BigInt = (1..=k as u64).map(BigInt::from).product();
    IntPolynomial::new(
        acc.into_iter()
            .map(|c| {
                let (q, r) = c.div_rem(&fact);
                debug_assert!(r.is_zero());
                q
            })
            .collect(),
    )
}

/// Primes just below 2^31, descending.
fn large_primes() -> impl Iterator<Item = u64> {
    (1u64 << 30..1u64 << 31)
        .rev()
        .filter(|&p| p % 2 == 1 && is_prime(p))
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    r
}

/// Coefficients (ascending, monic) of `det(xI - M)` modulo `p`.
fn charpoly_mod(m: &IntMatrix, p: u64) -> Vec<u64> {
    let n = m.size();
    let pi = p as i64;
    let mut h: Vec<u64> = (0..n * n)
        .map(|k| m.get(k / n, k % n).rem_euclid(pi) as u64)
        .collect();
    let at = |i: usize, j: usize| i * n + j;

    // similarity reduction to upper Hessenberg form
    for j in 0..n.saturating_sub(2) {
        let Some(piv) = (j + 1..n).find(|&i| h[at(i, j)] != 0) else {
            continue;
        };
        if piv != j + 1 {
            for c in 0..n {
                h.swap(at(piv, c), at(j + 1, c));
            }
            for r in 0..n {
                h.swap(at(r, piv), at(r, j + 1));
            }
        }
        let inv = inv_mod(h[at(j + 1, j)], p);
        for i in j + 2..n {
            let u = h[at(i, j)] * inv % p;
            if u == 0 {
                continue;
            }
            for c in 0..n {
                let sub = u * h[at(j + 1, c)] % p;
                h[at(i, c)] = (h[at(i, c)] + p - sub) % p;
            }
            for r in 0..n {
                h[at(r, j + 1)] = (h[at(r, j + 1)] + u * h[at(r, i)]) % p;
            }
        }
    }

    // p_{k+1} = (x - h_kk) p_k - sum_i h_ik (prod_{i<j<=k} h_{j,j-1}) p_i
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 0..n {
        let prev = &polys[k];
        let mut next = vec![0u64; k + 2];
        for (d, &c) in prev.iter().enumerate() {
            next[d + 1] = (next[d + 1] + c) % p;
            next[d] = (next[d] + p - c * h[at(k, k)] % p) % p;
        }
        let mut t = 1u64;
        for i in (0..k).rev() {
            t = t * h[at(i + 1, i)] % p;
            if t == 0 {
                break;
            }
            let f = t * h[at(i, k)] % p;
            if f == 0 {
                continue;
            }
            for (d, &c) in polys[i].iter().enumerate() {
                next[d] = (next[d] + p - f * c % p) % p;
            }
        }
        polys.push(next);
    }
    polys.pop().expect("at least the constant polynomial")
}

/// Bits needed for the absolute value of any coefficient of the
/// characteristic polynomial: `prod (1 + |row_i|_2)` bounds them all.
fn coefficient_bits(m: &IntMatrix) -> f64 {
    (0..m.size())
        .map(|i| {
            let sq: f64 = m.row(i).iter().map(|&v| (v as f64) * (v as f64)).sum();
            (1.0 + sq.sqrt()).log2()
        })
        .sum()
}

/// Hessenberg reduction modulo enough 31-bit primes, then Chinese remaindering
/// into the symmetric range.
pub fn charpoly_multimodular(m: &IntMatrix) -> IntPolynomial {
    let n = m.size();
    let needed = coefficient_bits(m) + 8.0;
    let mut modulus = BigInt::one();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    let mut bits = 0.0;
    for p in large_primes() {
        if bits > needed {
            break;
        }
        let residues = charpoly_mod(m, p);
        let pb = BigInt::from(p);
        let m_inv = inv_mod((&modulus % &pb).try_into().expect("fits in u64"), p);
        for (c, &r) in coeffs.iter_mut().zip(&residues) {
            let c_mod: u64 = c.mod_floor(&pb).try_into().expect("fits in u64");
            let delta = (r + p - c_mod) % p * m_inv % p;
            *c += &modulus * BigInt::from(delta);
        }
        modulus *= &pb;
        bits += (p as f64).log2();
    }
    let half = &modulus >> 1;
    for c in coeffs.iter_mut() {
        if *c > half {
            *c -= &modulus;
        }
    }
    debug_assert!(coeffs.last().is_some_and(|c| c.is_one()));
    debug_assert!(coeffs.iter().all(|c| c.abs() <= half));
    IntPolynomial::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mat(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn all_routes(m: &IntMatrix) -> IntPolynomial {
        let a = charpoly_bareiss(m);
        assert_eq!(a, charpoly_interpolation(m));
        assert_eq!(a, charpoly_multimodular(m));
        a
    }

    #[test]
    fn tiny_matrices() {
        assert_eq!(all_routes(&mat(&[&[0]])), IntPolynomial::x());
        assert_eq!(
            all_routes(&mat(&[&[0, 1], &[1, 0]])),
            IntPolynomial::from_i64s(&[-1, 0, 1])
        );
        assert_eq!(all_routes(&IntMatrix::zeros(0)), IntPolynomial::one());
    }

    #[test]
    fn complete_graphs() {
        for n in 1..=9usize {
            let mut m = IntMatrix::zeros(n);
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        m.set(i, j, 1);
                    }
                }
            }
            let expect = &IntPolynomial::linear(n as i64 - 1)
                * &IntPolynomial::from_i64s(&[1, 1]).pow(n - 1);
            assert_eq!(all_routes(&m), expect);
        }
    }

    #[test]
    fn zero_pivots_in_integer_determinant() {
        let rows: Vec<Vec<BigInt>> = [[0, 1, 2], [1, 0, 3], [4, -3, 8]]
            .iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect();
        // 0*(0+9) - 1*(8-12) + 2*(-3-0) = -2
        assert_eq!(det_bareiss(&rows), BigInt::from(-2));
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = IntPolynomial::from_i64s(&[7, -3, 0, 5, -1]);
        let ys: Vec<BigInt> = (0..=4).map(|t| p.eval(&BigInt::from(t))).collect();
        assert_eq!(interpolate_at_naturals(&ys), p);
    }

    #[test]
    fn large_entries_need_several_primes() {
        let m = mat(&[
            &[1_000_000_007, 3, -5],
            &[2, -999_999_999, 7],
            &[11, 13, 123_456_789],
        ]);
        assert_eq!(charpoly_multimodular(&m), charpoly_bareiss(&m));
    }

    fn small_matrix() -> impl Strategy<Value = IntMatrix> {
        (1usize..7).prop_flat_map(|n| {
            prop::collection::vec(-9i64..10, n * n).prop_map(move |v| {
                IntMatrix::from_rows(v.chunks(n).map(<[i64]>::to_vec).collect()).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn routes_agree(m in small_matrix()) {
            let p = all_routes(&m);
            prop_assert!(p.is_monic());
            prop_assert_eq!(p.degree(), Some(m.size()));
            prop_assert_eq!(-p.coeff(m.size() - 1), BigInt::from(m.trace()));
        }
    }
}
