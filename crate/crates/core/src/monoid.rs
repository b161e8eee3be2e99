//! Numerical monoids `S = <n_1, ..., n_k>` given by their minimal generators.
//!
//! A [`NumericalMonoid`] is validated at construction: the generators must be
//! distinct, pairwise non-representable by one another, and coprime as a
//! whole. The Apéry set with respect to the smallest generator is computed
//! once and answers every membership query afterwards.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonoidError {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("generator {0} is not a positive integer")]
    NonPositiveGenerator(i64),
    #[error("generator {0} is listed more than once")]
    DuplicateGenerator(i64),
    #[error("generator {generator} is not minimal: {generator} = {}", format_witness(.witness))]
    NotMinimal {
        generator: i64,
        /// `(coefficient, generator)` pairs summing to `generator`.
        witness: Vec<(u64, i64)>,
    },
    #[error("generators have gcd {0} > 1, so the monoid is not numerical")]
    NotCoprime(i64),
    #[error("generators {0} and {1} are too large: their product overflows 64-bit arithmetic")]
    Overflow(i64, i64),
    #[error("pair ({0}, {1}) is not coprime")]
    NotCoprimePair(i64, i64),
    #[error("pair ({0}, {1}) needs both entries to be at least 2")]
    PairTooSmall(i64, i64),
    #[error("{0} is not an element of the monoid")]
    NotAnElement(i64),
}

fn format_witness(witness: &[(u64, i64)]) -> String {
    witness
        .iter()
        .map(|(c, g)| format!("{c}*{g}"))
        .collect::<Vec<_>>()
        .join(" + ")
}

pub fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// A numerical monoid with validated minimal generators and precomputed
/// Apéry data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NumericalMonoid {
    generators: Vec<i64>,
    apery: Vec<i64>,
    frobenius: i64,
}

impl NumericalMonoid {
    /// Validates `gens` as a minimal generating set of a numerical monoid.
    ///
    /// The input order does not matter; the stored generators are sorted.
    /// Inputs are rejected rather than reduced: a redundant generator is
    /// reported with a witness combination of the others.
    pub fn new(gens: &[i64]) -> Result<Self, MonoidError> {
        if gens.is_empty() {
            return Err(MonoidError::EmptyGenerators);
        }
        if let Some(&g) = gens.iter().find(|&&g| g <= 0) {
            return Err(MonoidError::NonPositiveGenerator(g));
        }
        let mut generators = gens.to_vec();
        generators.sort_unstable();
        if let Some(w) = generators.windows(2).find(|w| w[0] == w[1]) {
            return Err(MonoidError::DuplicateGenerator(w[0]));
        }
        let smallest = generators[0];
        let largest = *generators.last().unwrap();
        if smallest.checked_mul(largest).is_none() {
            return Err(MonoidError::Overflow(smallest, largest));
        }
        for (i, &g) in generators.iter().enumerate() {
            let others: Vec<i64> = generators[..i].to_vec();
            if let Some(witness) = representation(&others, g) {
                return Err(MonoidError::NotMinimal {
                    generator: g,
                    witness,
                });
            }
        }
        let d = generators.iter().fold(0, |acc, &g| gcd(acc, g));
        if d != 1 {
            return Err(MonoidError::NotCoprime(d));
        }
        let apery = apery_set(&generators);
        let frobenius = apery.iter().max().copied().unwrap() - smallest;
        Ok(Self {
            generators,
            apery,
            frobenius,
        })
    }

    /// The atoms `n_1 < ... < n_k`.
    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    /// Embedding dimension `k`.
    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    pub fn multiplicity(&self) -> i64 {
        self.generators[0]
    }

    pub fn largest_generator(&self) -> i64 {
        *self.generators.last().unwrap()
    }

    /// `apery()[r]` is the least element of `S` congruent to `r` modulo `n_1`.
    pub fn apery(&self) -> &[i64] {
        &self.apery
    }

    /// Largest integer outside `S`, or `-1` when `S` is all of ℕ.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    /// Every Betti element lies in `[1, betti_search_bound()]`.
    ///
    /// Past `F(S) + 2·n_k`, every `n - n_i - n_j` is in `S`, and any two
    /// factorizations of `n` are then linked in the ∇ graph through
    /// `e_i + e_j + z` for any `z ∈ Z(n - n_i - n_j)`.
    pub fn betti_search_bound(&self) -> i64 {
        self.frobenius + 2 * self.largest_generator()
    }

    pub fn contains(&self, n: i64) -> bool {
        n >= 0 && n >= self.apery[(n % self.multiplicity()) as usize]
    }

    /// Monoid divisibility: `b | n` iff `n - b ∈ S`.
    pub fn divides(&self, b: i64, n: i64) -> Result<bool, MonoidError> {
        for x in [b, n] {
            if !self.contains(x) {
                return Err(MonoidError::NotAnElement(x));
            }
        }
        Ok(self.contains(n - b))
    }

    /// Whether `n` is one of the atoms.
    pub fn is_atom(&self, n: i64) -> bool {
        self.generators.binary_search(&n).is_ok()
    }
}

impl fmt::Display for NumericalMonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

/// Shortest paths over residues mod `n_1`, each generator an edge of its own
/// weight.
fn apery_set(generators: &[i64]) -> Vec<i64> {
    let m = generators[0];
    let size = m as usize;
    let mut dist = vec![i64::MAX; size];
    dist[0] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0i64, 0usize)));
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for &g in &generators[1..] {
            let next = (r + (g % m) as usize) % size;
            let nd = d + g;
            if nd < dist[next] {
                dist[next] = nd;
                heap.push(Reverse((nd, next)));
            }
        }
    }
    dist
}

/// Finds a nonnegative combination of `parts` (sorted ascending) equal to
/// `target`, if any.
///
/// Runs the same residue shortest-path search as the Apéry computation over
/// `<parts>`, remembering the last part used so a witness can be rebuilt.
fn representation(parts: &[i64], target: i64) -> Option<Vec<(u64, i64)>> {
    let &m = parts.first()?;
    let size = m as usize;
    let mut dist = vec![i64::MAX; size];
    let mut via: Vec<Option<usize>> = vec![None; size];
    dist[0] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0i64, 0usize)));
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for (i, &g) in parts.iter().enumerate().skip(1) {
            let next = (r + (g % m) as usize) % size;
            let nd = d + g;
            if nd < dist[next] {
                dist[next] = nd;
                via[next] = Some(i);
                heap.push(Reverse((nd, next)));
            }
        }
    }
    let r = (target % m) as usize;
    if dist[r] > target {
        return None;
    }
    let mut counts = vec![0u64; parts.len()];
    counts[0] = ((target - dist[r]) / m) as u64;
    let mut cur = r;
    while let Some(i) = via[cur] {
        counts[i] += 1;
        cur = (cur + size - (parts[i] % m) as usize) % size;
    }
    Some(
        counts
            .into_iter()
            .zip(parts.iter().copied())
            .filter(|(c, _)| *c > 0)
            .collect(),
    )
}

/// Decides `n ∈ <n1, n2>` through the two-generator symmetry criterion:
/// `n ∈ S` iff `n1·n2 - n1 - n2 - n ∉ S`.
///
/// The right-hand side is decided by direct enumeration of `a·n1 + b·n2`, so
/// this never consults the Apéry machinery and serves as a cross-check for
/// [`NumericalMonoid::contains`].
pub fn membership_criterion_2gen(n1: i64, n2: i64, n: i64) -> Result<bool, MonoidError> {
    if n1 < 2 || n2 < 2 {
        return Err(MonoidError::PairTooSmall(n1, n2));
    }
    if gcd(n1, n2) != 1 {
        return Err(MonoidError::NotCoprimePair(n1, n2));
    }
    let dual = n1 * n2 - n1 - n2 - n;
    Ok(!enumerated_in_pair(n1, n2, dual))
}

fn enumerated_in_pair(n1: i64, n2: i64, m: i64) -> bool {
    if m < 0 {
        return false;
    }
    (0..=m / n1).any(|a| (m - a * n1) % n2 == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_monoid_450() {
        let s = NumericalMonoid::new(&[11, 36, 39]).unwrap();
        assert_eq!(s.embedding_dimension(), 3);
        assert!(!s.contains(s.frobenius()));
        assert!(s.frobenius() > 0);
    }

    #[test]
    fn naturals() {
        let s = NumericalMonoid::new(&[1]).unwrap();
        assert_eq!(s.frobenius(), -1);
        assert_eq!(s.apery(), &[0]);
        assert!(s.contains(0) && s.contains(17));
        assert!(!s.contains(-1));
    }

    #[test]
    fn rejects_bad_generators() {
        assert_eq!(NumericalMonoid::new(&[]), Err(MonoidError::EmptyGenerators));
        assert_eq!(
            NumericalMonoid::new(&[3, 5, 3]),
            Err(MonoidError::DuplicateGenerator(3))
        );
        assert_eq!(
            NumericalMonoid::new(&[0, 5]),
            Err(MonoidError::NonPositiveGenerator(0))
        );
        assert_eq!(
            NumericalMonoid::new(&[2, 4, 7]),
            Err(MonoidError::NotMinimal {
                generator: 4,
                witness: vec![(2, 2)]
            })
        );
        // minimality is checked first, so <2,4> reports the redundant 4
        assert!(matches!(
            NumericalMonoid::new(&[2, 4]),
            Err(MonoidError::NotMinimal { generator: 4, .. })
        ));
        assert_eq!(
            NumericalMonoid::new(&[6, 9]),
            Err(MonoidError::NotCoprime(3))
        );
        assert!(matches!(
            NumericalMonoid::new(&[3, i64::MAX / 2]),
            Err(MonoidError::Overflow(..))
        ));
    }

    #[test]
    fn unique_betti_instance_is_minimal() {
        let s = NumericalMonoid::new(&[15, 6, 10]).unwrap();
        assert_eq!(s.generators(), &[6, 10, 15]);
    }

    #[test]
    fn not_minimal_witness_sums() {
        let err = NumericalMonoid::new(&[5, 7, 19]).unwrap_err();
        match err {
            MonoidError::NotMinimal { generator, witness } => {
                assert_eq!(generator, 19);
                let total: i64 = witness.iter().map(|&(c, g)| c as i64 * g).sum();
                assert_eq!(total, 19);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn membership() {
        let s = NumericalMonoid::new(&[11, 25, 29]).unwrap();
        assert!(s.contains(58));
        assert!(s.contains(0));
        let t = NumericalMonoid::new(&[7, 13, 17]).unwrap();
        assert!(!(1..7).any(|n| t.contains(n)));
    }

    #[test]
    fn apery_invariants() {
        let s = NumericalMonoid::new(&[11, 36, 39]).unwrap();
        let m = s.multiplicity();
        assert_eq!(s.apery()[0], 0);
        for (r, &w) in s.apery().iter().enumerate() {
            assert_eq!(w % m, r as i64);
            assert!(!s.contains(w - m));
        }
        assert_eq!(s.frobenius(), s.apery().iter().max().unwrap() - m);
    }

    #[test]
    fn divisibility() {
        let s = NumericalMonoid::new(&[11, 25, 29]).unwrap();
        assert_eq!(s.divides(150, 175), Ok(true));
        assert_eq!(s.divides(175, 175), Ok(true));
        assert_eq!(s.divides(154, 175), Ok(false));
        assert_eq!(s.divides(1, 175), Err(MonoidError::NotAnElement(1)));
    }

    #[test]
    fn two_generator_criterion() {
        assert_eq!(membership_criterion_2gen(5, 7, 23), Ok(false));
        assert_eq!(membership_criterion_2gen(5, 7, 24), Ok(true));
        let s = NumericalMonoid::new(&[5, 7]).unwrap();
        for n in -10..=35 {
            assert_eq!(
                membership_criterion_2gen(5, 7, n).unwrap(),
                s.contains(n),
                "n={n}"
            );
        }
        assert_eq!(
            membership_criterion_2gen(4, 6, 3),
            Err(MonoidError::NotCoprimePair(4, 6))
        );
        assert_eq!(
            membership_criterion_2gen(1, 6, 3),
            Err(MonoidError::PairTooSmall(1, 6))
        );
    }
}
