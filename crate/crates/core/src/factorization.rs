//! Factorizations as exponent vectors over a fixed list of atoms.
//!
//! Everything here works on count vectors alone, so numerical monoids and
//! block monoids share lengths, gcds and distances. Enumeration is a
//! multidimensional knapsack: each atom is a vector in ℕ^d and a factorization
//! of a target `t ∈ ℕ^d` is a count vector `a` with `Σ a_i·atom_i = t`. A
//! numerical monoid is the case `d = 1`.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::monoid::NumericalMonoid;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactorizationError {
    #[error("element {0} is negative")]
    NegativeElement(i64),
    #[error("factorization set is empty (the element is not in the monoid)")]
    EmptySet,
    #[error("factorizations have different dimensions ({0} vs {1})")]
    DimensionMismatch(usize, usize),
}

/// An exponent vector `(a_1, ..., a_k)` over the atoms of a monoid.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Factorization(Vec<u64>);

impl Factorization {
    pub fn new(counts: Vec<u64>) -> Self {
        Self(counts)
    }

    pub fn zero(dimension: usize) -> Self {
        Self(vec![0; dimension])
    }

    /// The factorization consisting of a single copy of atom `i`.
    pub fn unit(dimension: usize, i: usize) -> Self {
        let mut counts = vec![0; dimension];
        counts[i] = 1;
        Self(counts)
    }

    pub fn counts(&self) -> &[u64] {
        &self.0
    }

    pub fn dimension(&self) -> usize {
        self.0.len()
    }

    /// Number of atoms used, `|a| = a_1 + ... + a_k`.
    pub fn length(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Indices of atoms that occur.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, _)| i)
    }

    pub fn gcd(&self, other: &Self) -> Result<Self, FactorizationError> {
        self.check_dimension(other)?;
        Ok(Self(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        ))
    }

    /// `d(a, b) = max(|a - gcd(a,b)|, |b - gcd(a,b)|)`.
    pub fn distance(&self, other: &Self) -> Result<u64, FactorizationError> {
        self.check_dimension(other)?;
        Ok(self.distance_unchecked(other))
    }

    pub(crate) fn distance_unchecked(&self, other: &Self) -> u64 {
        let (mut left, mut right) = (0u64, 0u64);
        for (&a, &b) in self.0.iter().zip(&other.0) {
            if a > b {
                left += a - b;
            } else {
                right += b - a;
            }
        }
        left.max(right)
    }

    /// Whether `gcd(a, b) ≠ 0`.
    pub fn shares_atom(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).any(|(&a, &b)| a > 0 && b > 0)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, FactorizationError> {
        self.check_dimension(other)?;
        Ok(Self(
            self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect(),
        ))
    }

    /// Coordinatewise `a - b`, or `None` when `b` is not below `a`.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        if self.dimension() != other.dimension() {
            return None;
        }
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a.checked_sub(b))
            .collect::<Option<Vec<_>>>()
            .map(Self)
    }

    fn check_dimension(&self, other: &Self) -> Result<(), FactorizationError> {
        if self.dimension() == other.dimension() {
            Ok(())
        } else {
            Err(FactorizationError::DimensionMismatch(
                self.dimension(),
                other.dimension(),
            ))
        }
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<u64>> for Factorization {
    fn from(counts: Vec<u64>) -> Self {
        Self(counts)
    }
}

pub fn gcd(a: &Factorization, b: &Factorization) -> Result<Factorization, FactorizationError> {
    a.gcd(b)
}

pub fn distance(a: &Factorization, b: &Factorization) -> Result<u64, FactorizationError> {
    a.distance(b)
}

/// The set `Z(n)` of factorizations of one element, deduplicated and in
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorizationSet<E = i64> {
    element: E,
    factorizations: Vec<Factorization>,
}

impl<E> FactorizationSet<E> {
    pub fn new(element: E, mut factorizations: Vec<Factorization>) -> Self {
        factorizations.sort_unstable();
        factorizations.dedup();
        Self {
            element,
            factorizations,
        }
    }

    pub fn element(&self) -> &E {
        &self.element
    }

    pub fn factorizations(&self) -> &[Factorization] {
        &self.factorizations
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Factorization> {
        self.factorizations.iter()
    }

    pub fn len(&self) -> usize {
        self.factorizations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factorizations.is_empty()
    }

    pub fn contains(&self, a: &Factorization) -> bool {
        self.factorizations.binary_search(a).is_ok()
    }

    pub fn position(&self, a: &Factorization) -> Option<usize> {
        self.factorizations.binary_search(a).ok()
    }

    /// Sorted distinct lengths `L(n)`.
    pub fn length_set(&self) -> Result<Vec<u64>, FactorizationError> {
        if self.is_empty() {
            return Err(FactorizationError::EmptySet);
        }
        let lengths: BTreeSet<u64> = self.iter().map(Factorization::length).collect();
        Ok(lengths.into_iter().collect())
    }

    /// Successive differences of the sorted length set.
    pub fn delta_set(&self) -> Result<Vec<u64>, FactorizationError> {
        let lengths = self.length_set()?;
        let deltas: BTreeSet<u64> = lengths.windows(2).map(|w| w[1] - w[0]).collect();
        Ok(deltas.into_iter().collect())
    }

    /// Smallest and largest distance between distinct members, `None` when
    /// there are fewer than two.
    pub fn distance_range(&self) -> Option<(u64, u64)> {
        let fs = &self.factorizations;
        let mut range: Option<(u64, u64)> = None;
        for (i, a) in fs.iter().enumerate() {
            for b in &fs[i + 1..] {
                let d = a.distance_unchecked(b);
                range = Some(match range {
                    None => (d, d),
                    Some((lo, hi)) => (lo.min(d), hi.max(d)),
                });
            }
        }
        range
    }

    pub fn map_element<F>(self, element: F) -> FactorizationSet<F> {
        FactorizationSet {
            element,
            factorizations: self.factorizations,
        }
    }
}

impl<'a, E> IntoIterator for &'a FactorizationSet<E> {
    type Item = &'a Factorization;
    type IntoIter = std::slice::Iter<'a, Factorization>;

    fn into_iter(self) -> Self::IntoIter {
        self.factorizations.iter()
    }
}

/// A monoid whose factorizations are count vectors over a fixed atom list.
pub trait AtomEvaluation {
    type Element;

    fn atom_count(&self) -> usize;

    /// The element a count vector evaluates to.
    fn evaluate(&self, factorization: &Factorization) -> Self::Element;
}

impl AtomEvaluation for NumericalMonoid {
    type Element = i64;

    fn atom_count(&self) -> usize {
        self.embedding_dimension()
    }

    fn evaluate(&self, factorization: &Factorization) -> i64 {
        factorization
            .counts()
            .iter()
            .zip(self.generators())
            .map(|(&a, &g)| a as i64 * g)
            .sum()
    }
}

/// All count vectors `a` with `Σ a_i·atoms[i] = target`.
///
/// Atoms are tried from the last index down, each with its count running
/// from the largest feasible value to zero. Every atom must be nonzero and
/// have the same dimension as `target`. The result is in lexicographic order.
pub fn enumerate(atoms: &[Vec<u64>], target: &[u64]) -> Vec<Factorization> {
    let mut out = Vec::new();
    if atoms.is_empty() {
        if target.iter().all(|&t| t == 0) {
            out.push(Factorization::zero(0));
        }
        return out;
    }
    let mut remaining = target.to_vec();
    let mut counts = vec![0u64; atoms.len()];
    descend(
        atoms,
        atoms.len() - 1,
        &mut remaining,
        &mut counts,
        &mut out,
    );
    out.sort_unstable();
    out
}

fn descend(
    atoms: &[Vec<u64>],
    index: usize,
    remaining: &mut [u64],
    counts: &mut [u64],
    out: &mut Vec<Factorization>,
) {
    let atom = &atoms[index];
    let max = atom
        .iter()
        .zip(remaining.iter())
        .filter(|(&a, _)| a > 0)
        .map(|(&a, &r)| r / a)
        .min()
        .unwrap_or(0);
    if index == 0 {
        let exact = atom
            .iter()
            .zip(remaining.iter())
            .all(|(&a, &r)| a * max == r);
        if exact {
            counts[0] = max;
            out.push(Factorization(counts.to_vec()));
            counts[0] = 0;
        }
        return;
    }
    for (r, &a) in remaining.iter_mut().zip(atom) {
        *r -= a * max;
    }
    let mut c = max;
    loop {
        counts[index] = c;
        descend(atoms, index - 1, remaining, counts, out);
        if c == 0 {
            break;
        }
        c -= 1;
        for (r, &a) in remaining.iter_mut().zip(atom) {
            *r += a;
        }
    }
    counts[index] = 0;
}

/// `Z(n)` in a numerical monoid. Elements outside `S` give an empty set.
pub fn factorizations(s: &NumericalMonoid, n: i64) -> Result<FactorizationSet, FactorizationError> {
    if n < 0 {
        return Err(FactorizationError::NegativeElement(n));
    }
    if !s.contains(n) {
        return Ok(FactorizationSet::new(n, Vec::new()));
    }
    let atoms: Vec<Vec<u64>> = s.generators().iter().map(|&g| vec![g as u64]).collect();
    Ok(FactorizationSet::new(n, enumerate(&atoms, &[n as u64])))
}

/// Union of `Δ(n)` over all `n ≤ window`.
///
/// This approximates `Δ(S)` from below; the approximation is exact once the
/// window passes every element contributing a new difference.
pub fn delta_set_monoid(s: &NumericalMonoid, window: i64) -> Vec<u64> {
    let mut deltas = BTreeSet::new();
    for n in 0..=window {
        let z = factorizations(s, n).expect("nonnegative");
        if let Ok(d) = z.delta_set() {
            deltas.extend(d);
        }
    }
    deltas.into_iter().collect()
}
