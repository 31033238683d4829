//! The group Z_m x Z_n, its elements and its cyclic subgroups.
//!
//! Subgroups are stored as explicit sorted element sets. Two subgroups are
//! the same exactly when their element sets are equal, and the generator set
//! of a subgroup is one equivalence class of the "generates the same cyclic
//! subgroup" relation.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numtheory::{gcd, lcm, phi};

/// The direct product Z_m x Z_n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GroupSpec {
    m: u64,
    n: u64,
}

impl GroupSpec {
    pub fn new(m: u64, n: u64) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::ZeroArgument);
        }
        m.checked_mul(n).ok_or(Error::TooLarge {
            order: u64::MAX,
            cap: u64::MAX,
        })?;
        Ok(Self { m, n })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// Number of elements, `m * n`.
    pub fn order(&self) -> u64 {
        self.m * self.n
    }

    pub fn swapped(&self) -> Self {
        Self {
            m: self.n,
            n: self.m,
        }
    }

    /// Reject groups larger than `cap` before anything is allocated.
    pub fn check_cap(&self, cap: u64) -> Result<()> {
        if self.order() > cap {
            Err(Error::TooLarge {
                order: self.order(),
                cap,
            })
        } else {
            Ok(())
        }
    }

    pub fn element(&self, a: u64, b: u64) -> Result<GroupElement> {
        if a < self.m && b < self.n {
            Ok(GroupElement { a, b })
        } else {
            Err(Error::InvalidElement {
                a,
                b,
                m: self.m,
                n: self.n,
            })
        }
    }

    /// Builds an element from arbitrary integers, reducing them modulo m and n.
    pub fn reduce(&self, a: u64, b: u64) -> GroupElement {
        GroupElement {
            a: a % self.m,
            b: b % self.n,
        }
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement { a: 0, b: 0 }
    }

    /// Row-major vertex index `a * n + b`.
    pub fn index_of(&self, g: GroupElement) -> usize {
        (g.a * self.n + g.b) as usize
    }

    pub fn element_at(&self, index: usize) -> GroupElement {
        let i = index as u64;
        GroupElement {
            a: i / self.n,
            b: i % self.n,
        }
    }

    /// All elements in row-major order.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order() as usize).map(move |i| self.element_at(i))
    }

    /// `k * g`, written additively.
    pub fn multiple(&self, g: GroupElement, k: u64) -> GroupElement {
        let a = ((u128::from(g.a) * u128::from(k)) % u128::from(self.m)) as u64;
        let b = ((u128::from(g.b) * u128::from(k)) % u128::from(self.n)) as u64;
        GroupElement { a, b }
    }

    pub fn contains(&self, g: GroupElement) -> bool {
        g.a < self.m && g.b < self.n
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z_{} x Z_{}", self.m, self.n)
    }
}

/// A pair of residues `(a mod m, b mod n)`. Ordered lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GroupElement {
    pub a: u64,
    pub b: u64,
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// A cyclic subgroup together with its generator set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicSubgroup {
    elements: Vec<GroupElement>,
    generators: Vec<GroupElement>,
}

impl CyclicSubgroup {
    /// Sorted element set.
    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    /// Sorted set of generators (the equivalence class of the subgroup).
    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    /// Lexicographically smallest generator.
    pub fn canonical_generator(&self) -> GroupElement {
        self.generators[0]
    }

    pub fn contains_element(&self, g: GroupElement) -> bool {
        self.elements.binary_search(&g).is_ok()
    }
}

pub fn element_order(g: GroupElement, spec: &GroupSpec) -> u64 {
    lcm(spec.m / gcd(g.a, spec.m), spec.n / gcd(g.b, spec.n))
}

pub fn cyclic_subgroup(g: GroupElement, spec: &GroupSpec) -> Result<CyclicSubgroup> {
    if !spec.contains(g) {
        return Err(Error::InvalidElement {
            a: g.a,
            b: g.b,
            m: spec.m,
            n: spec.n,
        });
    }
    let order = element_order(g, spec);
    let mut elements = Vec::with_capacity(order as usize);
    let mut generators = Vec::with_capacity(phi(order) as usize);
    for k in 0..order {
        let h = spec.multiple(g, k);
        elements.push(h);
        if gcd(k, order) == 1 {
            generators.push(h);
        }
    }
    elements.sort_unstable();
    generators.sort_unstable();
    Ok(CyclicSubgroup {
        elements,
        generators,
    })
}

/// Every cyclic subgroup exactly once, ascending by order and then by
/// canonical generator.
pub fn all_cyclic_subgroups(spec: &GroupSpec) -> Vec<CyclicSubgroup> {
    let size = spec.order() as usize;
    let mut seen = vec![false; size];
    let mut out = Vec::new();
    for idx in 0..size {
        if seen[idx] {
            continue;
        }
        let s = cyclic_subgroup(spec.element_at(idx), spec).expect("element in range");
        for &g in s.generators() {
            seen[spec.index_of(g)] = true;
        }
        out.push(s);
    }
    out.sort_by_key(|s| (s.order(), s.canonical_generator()));
    out
}

/// True iff every element of `inner` lies in `outer`.
pub fn subgroup_contains(outer: &CyclicSubgroup, inner: &CyclicSubgroup) -> bool {
    if inner.order() > outer.order() || outer.order() % inner.order() != 0 {
        return false;
    }
    let mut it = outer.elements.iter().peekable();
    'next: for g in &inner.elements {
        while let Some(h) = it.next() {
            if h == g {
                continue 'next;
            }
            if h > g {
                return false;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(m: u64, n: u64) -> GroupSpec {
        GroupSpec::new(m, n).unwrap()
    }

    fn brute_order(g: GroupElement, s: &GroupSpec) -> u64 {
        (1..).find(|&t| s.multiple(g, t) == s.identity()).unwrap()
    }

    #[test]
    fn orders() {
        let s = spec(3, 6);
        assert_eq!(element_order(s.identity(), &s), 1);
        assert_eq!(element_order(s.element(1, 1).unwrap(), &s), 6);
        let s = spec(4, 6);
        let g = s.element(2, 3).unwrap();
        assert_eq!(brute_order(g, &s), 2);
        assert_eq!(element_order(g, &s), 2);
        for m in 1..=12 {
            for n in 1..=12 {
                let s = spec(m, n);
                for g in s.elements() {
                    assert_eq!(element_order(g, &s), brute_order(g, &s));
                }
            }
        }
    }

    #[test]
    fn subgroup_examples() {
        let s = spec(3, 6);
        let t = cyclic_subgroup(s.identity(), &s).unwrap();
        assert_eq!(t.order(), 1);
        assert_eq!(t.generators(), &[s.identity()]);

        let g = cyclic_subgroup(s.element(1, 3).unwrap(), &s).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.generators().len(), 2);

        let h = cyclic_subgroup(s.element(0, 2).unwrap(), &s).unwrap();
        assert_eq!(
            h.elements(),
            &[
                s.identity(),
                s.element(0, 2).unwrap(),
                s.element(0, 4).unwrap()
            ]
        );
        assert_eq!(
            h.generators(),
            &[s.element(0, 2).unwrap(), s.element(0, 4).unwrap()]
        );
        assert!(cyclic_subgroup(GroupElement { a: 3, b: 0 }, &s).is_err());
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(all_cyclic_subgroups(&spec(1, 1)).len(), 1);
        assert_eq!(all_cyclic_subgroups(&spec(3, 6)).len(), 10);
        for (p, q) in [(2u64, 3u64), (3, 2), (2, 5), (5, 2), (3, 5)] {
            let subs = all_cyclic_subgroups(&spec(p, p * q));
            assert_eq!(subs.len() as u64, 2 * p + 4);
            let count = |o: u64| subs.iter().filter(|s| s.order() == o).count() as u64;
            assert_eq!(count(p * q), p + 1);
            assert_eq!(count(p), p + 1);
            assert_eq!(count(q), 1);
            assert_eq!(count(1), 1);
        }
    }

    #[test]
    fn containment_examples() {
        let s = spec(3, 6);
        let subs = all_cyclic_subgroups(&s);
        let trivial = &subs[0];
        for x in &subs {
            assert!(subgroup_contains(x, x));
            assert!(subgroup_contains(x, trivial));
        }
        let c = |a, b| cyclic_subgroup(s.element(a, b).unwrap(), &s).unwrap();
        assert!(subgroup_contains(&c(0, 1), &c(0, 2)));
        assert!(!subgroup_contains(&c(1, 1), &c(0, 2)));
        assert!(subgroup_contains(&c(1, 1), &c(2, 2)));
        assert!(!subgroup_contains(&c(1, 1), &c(1, 2)));
    }

    #[test]
    fn ordering_is_deterministic() {
        let s = spec(6, 4);
        let subs = all_cyclic_subgroups(&s);
        let keys: Vec<_> = subs
            .iter()
            .map(|x| (x.order(), x.canonical_generator()))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn structural_invariants() {
        for m in 1..=100u64 {
            for n in 1..=(100 / m) {
                let s = spec(m, n);
                let subs = all_cyclic_subgroups(&s);
                let total: u64 = subs.iter().map(|x| x.generators().len() as u64).sum();
                assert_eq!(total, s.order());
                let l = lcm(m, n);
                for x in &subs {
                    assert!(x.contains_element(s.identity()));
                    assert_eq!(x.generators().len() as u64, phi(x.order()));
                    assert_eq!(l % x.order(), 0);
                    if n % m == 0 {
                        assert_eq!(n % x.order(), 0);
                    }
                    for &g in x.generators() {
                        assert_eq!(&cyclic_subgroup(g, &s).unwrap(), x);
                    }
                    // exactly one subgroup of each order dividing |x|
                    for d in crate::numtheory::divisors(x.order()).unwrap() {
                        let inside = subs
                            .iter()
                            .filter(|y| y.order() == d && subgroup_contains(x, y))
                            .count();
                        assert_eq!(
                            inside,
                            1,
                            "{s}: subgroup {} order {d}",
                            x.canonical_generator()
                        );
                    }
                }
            }
        }
    }
}
