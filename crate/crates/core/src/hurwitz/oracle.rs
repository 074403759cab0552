//! Brute-force transposition factorization counts in the symmetric group.
//!
//! A pants cover of degree `m` with boundary multiplicities `m_1..m_k` and
//! `m + k - 2` simple branch points corresponds to a tuple of that many
//! transpositions acting transitively on `m` symbols whose product has cycle
//! type `(m_1..m_k)`. Covers up to isomorphism are orbits of such tuples under
//! simultaneous conjugation; orbits are counted with Burnside's lemma, where
//! the fixed tuples of `g` are the tuples of transpositions commuting with `g`.

use std::collections::{HashMap, HashSet};

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use super::exact::{factorial, int};
use super::HurwitzError;

/// Largest degree the oracle accepts unless told otherwise.
pub const DEFAULT_ORACLE_BOUND: u64 = 6;

type Perm = Vec<u8>;

fn identity(m: usize) -> Perm {
    (0..m as u8).collect()
}

fn transposition(m: usize, a: usize, b: usize) -> Perm {
    let mut p = identity(m);
    p.swap(a, b);
    p
}

/// `(p * q)(x) = p(q(x))`.
fn compose(p: &Perm, q: &Perm) -> Perm {
    q.iter().map(|&x| p[x as usize]).collect()
}

fn inverse(p: &Perm) -> Perm {
    let mut inv = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x as usize] = i as u8;
    }
    inv
}

/// Cycle lengths in nonincreasing order.
fn cycle_type(p: &Perm) -> Vec<u64> {
    let mut seen = vec![false; p.len()];
    let mut lens = Vec::new();
    for s in 0..p.len() {
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = p[x] as usize;
            len += 1;
        }
        if len > 0 {
            lens.push(len);
        }
    }
    lens.sort_unstable_by(|a, b| b.cmp(a));
    lens
}

/// A permutation with the given cycle lengths, cycles on consecutive symbols.
fn with_cycle_type(lens: &[u64]) -> Perm {
    let m: u64 = lens.iter().sum();
    let mut p = identity(m as usize);
    let mut start = 0usize;
    for &len in lens {
        let len = len as usize;
        for i in 0..len {
            p[start + i] = (start + (i + 1) % len) as u8;
        }
        start += len;
    }
    p
}

fn partitions(m: u64, max: u64) -> Vec<Vec<u64>> {
    if m == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=m.min(max)).rev() {
        for mut rest in partitions(m - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Size of the conjugacy class of cycle type `lens` in `S_m`.
fn class_size(lens: &[u64]) -> BigInt {
    let m: u64 = lens.iter().sum();
    let mut z = int(1);
    for run in lens.chunk_by(|a, b| a == b) {
        z *= num_traits::pow(int(run[0]), run.len()) * factorial(run.len() as u64);
    }
    factorial(m) / z
}

/// Component labels: each symbol maps to the smallest symbol it is joined to.
fn merge(comp: &[u8], a: usize, b: usize) -> Vec<u8> {
    let (ca, cb) = (comp[a], comp[b]);
    if ca == cb {
        return comp.to_vec();
    }
    let (keep, drop) = (ca.min(cb), ca.max(cb));
    comp.iter().map(|&c| if c == drop { keep } else { c }).collect()
}

/// Tuples of `steps` transpositions drawn from `gens`, acting transitively,
/// counted by their product.
fn products(m: usize, gens: &[(usize, usize)], steps: u64) -> HashMap<Perm, u128> {
    let mut states: HashMap<(Perm, Vec<u8>), u128> = HashMap::new();
    states.insert((identity(m), identity(m)), 1);
    let taus: Vec<Perm> = gens.iter().map(|&(a, b)| transposition(m, a, b)).collect();
    for _ in 0..steps {
        let mut next: HashMap<(Perm, Vec<u8>), u128> = HashMap::new();
        for ((prod, comp), count) in &states {
            for (tau, &(a, b)) in taus.iter().zip(gens) {
                *next.entry((compose(prod, tau), merge(comp, a, b))).or_default() += count;
            }
        }
        states = next;
    }
    let mut out: HashMap<Perm, u128> = HashMap::new();
    for ((prod, comp), count) in states {
        if comp.iter().all(|&c| c == 0) {
            *out.entry(prod).or_default() += count;
        }
    }
    out
}

fn check(weights: &[u64], bound: u64) -> Result<(u64, Vec<u64>), HurwitzError> {
    if weights.is_empty() {
        return Err(HurwitzError::EmptyBoundary);
    }
    if weights.contains(&0) {
        return Err(HurwitzError::ZeroWeight);
    }
    let m: u64 = weights.iter().sum();
    if m > bound {
        return Err(HurwitzError::BoundExceeded { degree: m, bound });
    }
    let mut lens = weights.to_vec();
    lens.sort_unstable_by(|a, b| b.cmp(a));
    Ok((m, lens))
}

/// `N(sigma)`: ordered tuples of `m + k - 2` transpositions acting
/// transitively whose product is one fixed permutation of cycle type
/// `weights`.
pub fn factorization_count(weights: &[u64]) -> Result<BigInt, HurwitzError> {
    let (m, lens) = check(weights, DEFAULT_ORACLE_BOUND)?;
    let steps = m + lens.len() as u64 - 2;
    let gens: Vec<(usize, usize)> = (0..m as usize).tuple_combinations().collect();
    let sigma = with_cycle_type(&lens);
    Ok(BigInt::from(products(m as usize, &gens, steps).get(&sigma).copied().unwrap_or(0)))
}

/// Pants Hurwitz number as an orbit count, for `sum(weights) <= 6`.
pub fn factorization_oracle(weights: &[u64]) -> Result<BigRational, HurwitzError> {
    factorization_oracle_bounded(weights, DEFAULT_ORACLE_BOUND)
}

pub fn factorization_oracle_bounded(weights: &[u64], bound: u64) -> Result<BigRational, HurwitzError> {
    let (m, lens) = check(weights, bound)?;
    let steps = m + lens.len() as u64 - 2;
    let mu = m as usize;
    let all: Vec<(usize, usize)> = (0..mu).tuple_combinations().collect();
    let fixed: BigInt = partitions(m, m)
        .par_iter()
        .map(|g_type| {
            let g = with_cycle_type(g_type);
            let ginv = inverse(&g);
            let commuting: Vec<(usize, usize)> = all
                .iter()
                .copied()
                .filter(|&(a, b)| {
                    let t = transposition(mu, a, b);
                    compose(&compose(&g, &t), &ginv) == t
                })
                .collect();
            let fix: u128 = products(mu, &commuting, steps)
                .iter()
                .filter(|(p, _)| cycle_type(p) == lens)
                .map(|(_, c)| c)
                .sum();
            class_size(g_type) * BigInt::from(fix)
        })
        .sum();
    Ok(BigRational::new(fixed, factorial(m)))
}

/// Result of an explicit orbit enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitCount {
    /// Number of orbits under simultaneous conjugation.
    pub orbits: u64,
    /// Number of tuples divided by `m!`: orbits weighted by `1/|stabilizer|`.
    pub mass: BigRational,
}

/// Enumerates every tuple of `steps` transpositions in `S_m` that acts
/// transitively and whose product has cycle type `product_type`, and
/// collects the tuples into conjugation orbits one by one. Exponential; meant
/// for `m <= 4`.
pub fn transposition_orbits(m: u64, steps: u64, product_type: &[u64]) -> OrbitCount {
    let mu = m as usize;
    let mut want = product_type.to_vec();
    want.sort_unstable_by(|a, b| b.cmp(a));
    let taus: Vec<Perm> = (0..mu)
        .tuple_combinations()
        .map(|(a, b)| transposition(mu, a, b))
        .collect();
    let group: Vec<Perm> = (0..m as u8).permutations(mu).collect();

    let mut tuples = 0u64;
    let mut seen: HashSet<Vec<Perm>> = HashSet::new();
    let mut orbits = 0u64;
    let choices = (0..steps).map(|_| 0..taus.len()).multi_cartesian_product();
    // `multi_cartesian_product` yields nothing for zero factors.
    let choices: Box<dyn Iterator<Item = Vec<usize>>> = if steps == 0 {
        Box::new(std::iter::once(Vec::new()))
    } else {
        Box::new(choices)
    };
    for idx in choices {
        let tuple: Vec<Perm> = idx.iter().map(|&i| taus[i].clone()).collect();
        let prod = tuple.iter().fold(identity(mu), |acc, t| compose(&acc, t));
        if cycle_type(&prod) != want {
            continue;
        }
        let mut comp = identity(mu);
        for t in &tuple {
            let moved: Vec<usize> = (0..mu).filter(|&x| t[x] as usize != x).collect();
            comp = merge(&comp, moved[0], moved[1]);
        }
        if comp.iter().any(|&c| c != 0) {
            continue;
        }
        tuples += 1;
        if seen.contains(&tuple) {
            continue;
        }
        orbits += 1;
        for g in &group {
            let ginv = inverse(g);
            seen.insert(tuple.iter().map(|t| compose(&compose(g, t), &ginv)).collect());
        }
    }
    OrbitCount {
        orbits,
        mass: BigRational::new(int(tuples), factorial(m)),
    }
}

/// Complex genus-0 Hurwitz number of degree `n` from explicit enumeration of
/// `2n - 2` transpositions with identity product.
pub fn complex_g0_oracle(n: u64) -> OrbitCount {
    transposition_orbits(n, 2 * n - 2, &vec![1; n as usize])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hurwitz::exact::ratio;

    fn r(x: u64) -> BigRational {
        ratio(int(x))
    }

    #[test]
    fn cycle_types() {
        assert_eq!(cycle_type(&with_cycle_type(&[3, 1, 1])), vec![3, 1, 1]);
        assert_eq!(class_size(&[2, 1]), int(3));
        assert_eq!(class_size(&[2, 2]), int(3));
        assert_eq!(class_size(&[4]), int(6));
        assert_eq!(partitions(5, 5).len(), 7);
    }

    #[test]
    fn fixed_permutation_counts() {
        assert_eq!(factorization_count(&[3]).unwrap(), int(3));
        assert_eq!(factorization_count(&[4]).unwrap(), int(16));
        assert_eq!(factorization_count(&[1, 2]).unwrap(), int(8));
        assert_eq!(factorization_count(&[1, 1]).unwrap(), int(1));
    }

    #[test]
    fn small_oracle_values() {
        assert_eq!(factorization_oracle(&[1]).unwrap(), r(1));
        assert_eq!(factorization_oracle(&[2]).unwrap(), r(1));
        assert_eq!(factorization_oracle(&[1, 1]).unwrap(), r(1));
        assert_eq!(factorization_oracle(&[3]).unwrap(), r(1));
        assert_eq!(factorization_oracle(&[1, 2]).unwrap(), r(4));
        assert_eq!(factorization_oracle(&[4]).unwrap(), r(4));
        assert_eq!(factorization_oracle(&[1, 1, 1]).unwrap(), r(4));
    }

    #[test]
    fn burnside_matches_explicit_orbits() {
        for m in 1..=4u64 {
            for lens in partitions(m, m) {
                let steps = m + lens.len() as u64 - 2;
                let explicit = transposition_orbits(m, steps, &lens);
                assert_eq!(factorization_oracle(&lens).unwrap(), r(explicit.orbits), "{lens:?}");
            }
        }
    }

    #[test]
    fn degree_three_identity_orbits() {
        let c = complex_g0_oracle(3);
        assert_eq!(c.orbits, 4);
        assert_eq!(c.mass, r(4));
        let two = complex_g0_oracle(2);
        assert_eq!((two.orbits, two.mass), (1, BigRational::new(int(1), int(2))));
    }

    #[test]
    fn errors() {
        assert_eq!(factorization_oracle(&[]), Err(HurwitzError::EmptyBoundary));
        assert_eq!(factorization_oracle(&[1, 0]), Err(HurwitzError::ZeroWeight));
        assert!(matches!(
            factorization_oracle(&[4, 3]),
            Err(HurwitzError::BoundExceeded { degree: 7, bound: 6 })
        ));
    }
}
