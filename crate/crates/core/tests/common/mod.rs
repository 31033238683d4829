//! Test-side oracles written independently of the library internals.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::Zero;
use pgraph::charpoly::IntPolynomial;

/// Adjacency of the power graph straight from the definition: distinct
/// `u, v` are adjacent when one is a multiple of the other.
pub fn naive_adjacency(m: u64, n: u64) -> Vec<Vec<i64>> {
    let elems: Vec<(u64, u64)> = (0..m).flat_map(|a| (0..n).map(move |b| (a, b))).collect();
    let multiples = |&(a, b): &(u64, u64)| -> Vec<(u64, u64)> {
        (0..m * n).map(|k| ((k * a) % m, (k * b) % n)).collect()
    };
    let powers: Vec<Vec<(u64, u64)>> = elems.iter().map(multiples).collect();
    let size = elems.len();
    let mut adj = vec![vec![0; size]; size];
    for i in 0..size {
        for j in 0..size {
            if i != j && (powers[i].contains(&elems[j]) || powers[j].contains(&elems[i])) {
                adj[i][j] = 1;
            }
        }
    }
    adj
}

/// Characteristic polynomial by the Faddeev-LeVerrier recurrence.
pub fn faddeev_leverrier(a: &[Vec<i64>]) -> IntPolynomial {
    let n = a.len();
    let a: Vec<Vec<BigInt>> = a
        .iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let mul = |x: &Vec<Vec<BigInt>>, y: &Vec<Vec<BigInt>>| -> Vec<Vec<BigInt>> {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut s = BigInt::zero();
                        for k in 0..n {
                            if !x[i][k].is_zero() && !y[k][j].is_zero() {
                                s += &x[i][k] * &y[k][j];
                            }
                        }
                        s
                    })
                    .collect()
            })
            .collect()
    };
    // coefficients descending: c[0] = 1
    let mut c = vec![BigInt::from(1)];
    let mut mk: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        let mut next = mul(&a, &mk);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &c[k - 1];
        }
        mk = next;
        let am = mul(&a, &mk);
        let tr: BigInt = (0..n).map(|i| am[i][i].clone()).sum();
        c.push(-tr / BigInt::from(k));
    }
    c.reverse();
    IntPolynomial::new(c)
}

pub fn oracle_charpoly(m: u64, n: u64) -> IntPolynomial {
    faddeev_leverrier(&naive_adjacency(m, n))
}

#[test]
fn oracle_on_a_triangle() {
    let k3 = vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]];
    assert_eq!(
        faddeev_leverrier(&k3),
        IntPolynomial::from_i64s(&[-2, -3, 0, 1])
    );
}
