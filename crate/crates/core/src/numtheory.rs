//! Integer arithmetic helpers: trial-division factorization, divisors,
//! Euler's totient, gcd/lcm.
//!
//! Inputs are group orders, so everything here is plain `u64` trial division.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// Prime factorization of a positive integer, primes ascending.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factorization {
    prime_powers: BTreeMap<u64, u32>,
}

impl Factorization {
    pub fn prime_powers(&self) -> &BTreeMap<u64, u32> {
        &self.prime_powers
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.prime_powers.keys().copied()
    }

    pub fn exponent(&self, p: u64) -> u32 {
        self.prime_powers.get(&p).copied().unwrap_or(0)
    }

    /// Multiplies the prime powers back together.
    pub fn value(&self) -> u64 {
        self.prime_powers.iter().map(|(&p, &e)| p.pow(e)).product()
    }

    pub fn divisor_count(&self) -> u64 {
        self.prime_powers
            .values()
            .map(|&e| u64::from(e) + 1)
            .product()
    }

    pub fn is_prime(&self) -> bool {
        self.prime_powers.len() == 1 && self.prime_powers.values().all(|&e| e == 1)
    }
}

pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    let mut prime_powers = BTreeMap::new();
    let mut rest = n;
    let mut d = 2u64;
    while d * d <= rest {
        if rest % d == 0 {
            let mut e = 0;
            while rest % d == 0 {
                rest /= d;
                e += 1;
            }
            prime_powers.insert(d, e);
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        prime_powers.insert(rest, 1);
    }
    Ok(Factorization { prime_powers })
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n).map(|f| f.is_prime()).unwrap_or(false)
}

pub fn euler_phi(n: u64) -> Result<u64> {
    let f = factorize(n)?;
    Ok(f.prime_powers
        .iter()
        .map(|(&p, &e)| (p - 1) * p.pow(e - 1))
        .product())
}

/// Totient for arguments already known to be positive.
pub(crate) fn phi(n: u64) -> u64 {
    euler_phi(n).expect("phi of a positive integer")
}

/// All divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    let f = factorize(n)?;
    let mut out = vec![1u64];
    for (&p, &e) in &f.prime_powers {
        let len = out.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

pub fn gcd_lcm(a: u64, b: u64) -> Result<(u64, u64)> {
    if a == 0 || b == 0 {
        return Err(Error::ZeroArgument);
    }
    Ok((gcd(a, b), lcm(a, b)))
}

/// If `n = p^k` for a prime `p` and `k >= 1`, returns `(p, k)`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    let f = factorize(n).ok()?;
    if f.prime_powers.len() == 1 {
        f.prime_powers.into_iter().next()
    } else {
        None
    }
}

/// If `n = p*q` for distinct primes, returns them ascending.
pub fn distinct_prime_pair(n: u64) -> Option<(u64, u64)> {
    let f = factorize(n).ok()?;
    let pp: Vec<_> = f.prime_powers.into_iter().collect();
    match pp.as_slice() {
        [(p, 1), (q, 1)] => Some((*p, *q)),
        _ => None,
    }
}
