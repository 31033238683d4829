//! Generator recipes for the cyclic subgroups of Z_p x Z_n, Z_pq x Z_n and
//! Z_{p^2} x Z_n, each emitted exactly as the closed forms list them.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{
    all_cyclic_subgroups, cyclic_subgroup, CyclicSubgroup, GroupElement, GroupSpec,
};
use crate::numtheory::{divisors, is_prime};

/// Which enumeration produced a profile.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Pattern {
    /// Z_p x Z_n with p | n.
    PrimeFactor,
    /// Z_pq x Z_n with pq | n.
    SquarefreePair,
    /// Z_{p^2} x Z_n with p^2 | n.
    PrimeSquare,
    /// Z_{p^2} x Z_n with p | n but p^2 not dividing n.
    PrimeSquareNonDividing,
}

/// One group of divisors of `n` sharing a recipe.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DivisorClass {
    pub label: &'static str,
    pub divisors: Vec<u64>,
    /// Subgroups the recipe lists per divisor.
    pub per_divisor: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseProfile {
    pub pattern: Pattern,
    pub p: u64,
    pub q: Option<u64>,
    pub n: u64,
    pub classes: Vec<DivisorClass>,
}

impl CaseProfile {
    /// Size of each divisor class, in listing order.
    pub fn counters(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.divisors.len()).collect()
    }

    /// Running totals of the counters.
    pub fn prefix_sums(&self) -> Vec<usize> {
        self.counters()
            .iter()
            .scan(0, |acc, &c| {
                *acc += c;
                Some(*acc)
            })
            .collect()
    }

    pub fn divisor_count(&self) -> usize {
        self.counters().iter().sum()
    }

    /// Subgroup total implied by the per-divisor counts.
    pub fn subgroup_count(&self) -> u64 {
        self.classes
            .iter()
            .map(|c| c.per_divisor * c.divisors.len() as u64)
            .sum()
    }

    pub fn class(&self, label: &str) -> Option<&DivisorClass> {
        self.classes.iter().find(|c| c.label == label)
    }
}

/// `<generator>` is claimed to be a cyclic subgroup of order `order`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SubgroupRecipe {
    pub generator: GroupElement,
    pub order: u64,
    pub class: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Enumeration {
    pub spec: GroupSpec,
    pub profile: CaseProfile,
    pub recipes: Vec<SubgroupRecipe>,
}

/// Outcome of comparing recipes with the brute-force subgroup list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnumerationCheck {
    pub generated: usize,
    pub expected: usize,
    /// Recipes whose subgroup has a different order than claimed.
    pub wrong_order: Vec<SubgroupRecipe>,
    /// Recipes repeating an earlier subgroup.
    pub duplicates: Vec<SubgroupRecipe>,
    /// Canonical generators of subgroups no recipe produced.
    pub missing: Vec<GroupElement>,
}

impl EnumerationCheck {
    pub fn matches(&self) -> bool {
        self.wrong_order.is_empty()
            && self.duplicates.is_empty()
            && self.missing.is_empty()
            && self.generated == self.expected
    }
}

impl Enumeration {
    pub fn subgroups(&self) -> Vec<CyclicSubgroup> {
        self.recipes
            .iter()
            .map(|r| cyclic_subgroup(r.generator, &self.spec).expect("recipes are reduced"))
            .collect()
    }

    /// Element-set comparison against `all_cyclic_subgroups`.
    pub fn compare_with_brute_force(&self) -> EnumerationCheck {
        let brute = all_cyclic_subgroups(&self.spec);
        let mut seen = BTreeSet::new();
        let mut wrong_order = Vec::new();
        let mut duplicates = Vec::new();
        for (r, s) in self.recipes.iter().zip(self.subgroups()) {
            if s.order() != r.order {
                wrong_order.push(*r);
            }
            if !seen.insert(s.elements().to_vec()) {
                duplicates.push(*r);
            }
        }
        let missing = brute
            .iter()
            .filter(|s| !seen.contains(s.elements()))
            .map(CyclicSubgroup::canonical_generator)
            .collect();
        EnumerationCheck {
            generated: seen.len(),
            expected: brute.len(),
            wrong_order,
            duplicates,
            missing,
        }
    }
}

fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{p} is not prime")))
    }
}

fn valuation(p: u64, mut d: u64) -> u32 {
    let mut v = 0;
    while d % p == 0 {
        d /= p;
        v += 1;
    }
    v
}

struct Builder {
    spec: GroupSpec,
    recipes: Vec<SubgroupRecipe>,
}

impl Builder {
    fn new(m: u64, n: u64) -> Result<Self> {
        Ok(Self {
            spec: GroupSpec::new(m, n)?,
            recipes: Vec::new(),
        })
    }

    fn push(&mut self, a: u64, b: u64, order: u64, class: usize) {
        self.recipes.push(SubgroupRecipe {
            generator: self.spec.reduce(a, b),
            order,
            class,
        });
    }

    fn finish(self, profile: CaseProfile) -> Enumeration {
        Enumeration {
            spec: self.spec,
            profile,
            recipes: self.recipes,
        }
    }
}

fn classify(
    n: u64,
    labels: &[(&'static str, u64)],
    class_of: impl Fn(u64) -> usize,
) -> Result<Vec<DivisorClass>> {
    let mut classes: Vec<DivisorClass> = labels
        .iter()
        .map(|&(label, per_divisor)| DivisorClass {
            label,
            divisors: Vec::new(),
            per_divisor,
        })
        .collect();
    for d in divisors(n)? {
        classes[class_of(d)].divisors.push(d);
    }
    Ok(classes)
}

/// Cyclic subgroups of Z_p x Z_n for a prime `p` dividing `n`.
pub fn enumerate_prime_factor(p: u64, n: u64) -> Result<Enumeration> {
    require_prime(p)?;
    if n == 0 || n % p != 0 {
        return Err(Error::Precondition(format!("{p} does not divide {n}")));
    }
    let classes = classify(
        n,
        &[("r", p), ("t", p + 1), ("coprime", 1)],
        |d| match valuation(p, d) {
            0 => 2,
            1 => 1,
            _ => 0,
        },
    )?;
    let mut b = Builder::new(p, n)?;
    for (ci, class) in classes.iter().enumerate() {
        for &d in &class.divisors {
            let e = n / d;
            match ci {
                0 => (0..p).for_each(|j| b.push(j, e, d, ci)),
                1 => {
                    (0..p).for_each(|j| b.push(j, e, d, ci));
                    b.push(1, e * p, d, ci);
                }
                _ => b.push(0, e, d, ci),
            }
        }
    }
    Ok(b.finish(CaseProfile {
        pattern: Pattern::PrimeFactor,
        p,
        q: None,
        n,
        classes,
    }))
}

/// Cyclic subgroups of Z_pq x Z_n for distinct primes with `pq | n`.
pub fn enumerate_squarefree_pair(p: u64, q: u64, n: u64) -> Result<Enumeration> {
    require_prime(p)?;
    require_prime(q)?;
    if p == q {
        return Err(Error::Precondition("p and q must be distinct".into()));
    }
    if n == 0 || n % (p * q) != 0 {
        return Err(Error::Precondition(format!(
            "{} does not divide {n}",
            p * q
        )));
    }
    let pq = p * q;
    let labels = [
        ("r1", 1),
        ("r2", p + 1),
        ("r3", p),
        ("r4", q + 1),
        ("r5", q),
        ("r6", pq + p + q + 1),
        ("r7", pq + p),
        ("r8", pq + q),
        ("rest", pq),
    ];
    let classes = classify(n, &labels, |d| {
        match (valuation(p, d).min(2), valuation(q, d).min(2)) {
            (0, 0) => 0,
            (1, 0) => 1,
            (2, 0) => 2,
            (0, 1) => 3,
            (0, 2) => 4,
            (1, 1) => 5,
            (2, 1) => 6,
            (1, 2) => 7,
            _ => 8,
        }
    })?;
    let mut b = Builder::new(pq, n)?;
    for (ci, class) in classes.iter().enumerate() {
        for &d in &class.divisors {
            let e = n / d;
            let all_first = |b: &mut Builder| (0..pq).for_each(|j| b.push(j, e, d, ci));
            match ci {
                0 => b.push(0, e, d, ci),
                1 | 2 => {
                    (0..p).for_each(|j| b.push(j * q, e, d, ci));
                    if ci == 1 {
                        b.push(q, e * p, d, ci);
                    }
                }
                3 | 4 => {
                    (0..q).for_each(|j| b.push(j * p, e, d, ci));
                    if ci == 3 {
                        b.push(p, e * q, d, ci);
                    }
                }
                5 => {
                    all_first(&mut b);
                    (1..q).for_each(|i| b.push(1, e * i * p, d, ci));
                    b.push(q, e * p, d, ci);
                    (1..p).for_each(|i| b.push(1, e * i * q, d, ci));
                    b.push(p, e * q, d, ci);
                    b.push(1, e * pq, d, ci);
                }
                6 => {
                    all_first(&mut b);
                    b.push(p, e * q, d, ci);
                    (1..p).for_each(|i| b.push(i, e * q, d, ci));
                }
                7 => {
                    all_first(&mut b);
                    (1..q).for_each(|i| b.push(1, e * i * p, d, ci));
                    b.push(q, e * p, d, ci);
                }
                _ => all_first(&mut b),
            }
        }
    }
    Ok(b.finish(CaseProfile {
        pattern: Pattern::SquarefreePair,
        p,
        q: Some(q),
        n,
        classes,
    }))
}

/// Cyclic subgroups of Z_{p^2} x Z_n for a prime with `p^2 | n`.
pub fn enumerate_prime_square(p: u64, n: u64) -> Result<Enumeration> {
    require_prime(p)?;
    if n == 0 || n % (p * p) != 0 {
        return Err(Error::Precondition(format!(
            "{} does not divide {n}",
            p * p
        )));
    }
    let p2 = p * p;
    let labels = [("r1", p2), ("r2", p2 + p), ("r3", p + 1), ("coprime", 1)];
    let classes = classify(n, &labels, |d| match valuation(p, d) {
        0 => 3,
        1 => 2,
        2 => 1,
        _ => 0,
    })?;
    let mut b = Builder::new(p2, n)?;
    for (ci, class) in classes.iter().enumerate() {
        for &d in &class.divisors {
            let e = n / d;
            match ci {
                0 => (0..p2).for_each(|j| b.push(j, e, d, ci)),
                1 => {
                    (0..p2).for_each(|j| b.push(j, e, d, ci));
                    (1..p).for_each(|j| b.push(j, e * p, d, ci));
                    b.push(1, e * p2, d, ci);
                }
                2 => {
                    (0..p).for_each(|j| b.push(j * p, e, d, ci));
                    b.push(p, e * p, d, ci);
                }
                _ => b.push(0, e, d, ci),
            }
        }
    }
    Ok(b.finish(CaseProfile {
        pattern: Pattern::PrimeSquare,
        p,
        q: None,
        n,
        classes,
    }))
}

/// Cyclic subgroups of Z_{p^2} x Z_n when `p` divides `n` exactly once.
pub fn enumerate_prime_square_non_dividing(p: u64, n: u64) -> Result<Enumeration> {
    require_prime(p)?;
    if n == 0 || n % p != 0 || n % (p * p) == 0 {
        return Err(Error::Precondition(format!(
            "{p} must divide {n} exactly once"
        )));
    }
    let p2 = p * p;
    let labels = [("c", 1), ("divisible", p + 1)];
    let mut classes = classify(n, &labels, |d| usize::from(d % p == 0))?;
    let mut b = Builder::new(p2, n)?;
    for (ci, class) in classes.iter().enumerate() {
        for &d in &class.divisors {
            let e = n / d;
            if ci == 0 {
                b.push(0, e, d, ci);
            } else {
                (0..p).for_each(|j| b.push(j * p, e, d, ci));
                b.push(p, e * p, d, ci);
            }
        }
    }
    // subgroups of order d * p^2, one family per divisor coprime to p
    let lifted = DivisorClass {
        label: "lifted",
        divisors: classes[0].divisors.clone(),
        per_divisor: p,
    };
    for &d in &lifted.divisors {
        b.push(1, n / d, d * p2, 2);
        (1..p).for_each(|j| b.push(j, n / (d * p), d * p2, 2));
    }
    classes.push(lifted);
    Ok(b.finish(CaseProfile {
        pattern: Pattern::PrimeSquareNonDividing,
        p,
        q: None,
        n,
        classes,
    }))
}
