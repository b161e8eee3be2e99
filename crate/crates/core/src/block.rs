//! The block monoid `B(Z_n)` of zero-sum sequences over a cyclic group.
//!
//! Group elements are the residues `0..n` with `1` as the fixed generator.
//! Sequences are multiplicity vectors, so divisibility is a pointwise
//! comparison and a factorization is a count vector over the atom table.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::catenary::catenary_degree;
use crate::factorization::{enumerate, AtomEvaluation, Factorization, FactorizationSet};

/// Largest group order for which atoms are enumerated.
pub const MAX_ORDER: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BlockError {
    #[error("group order {0} is below 3")]
    OrderTooSmall(usize),
    #[error("group order {0} exceeds the supported maximum of {MAX_ORDER}")]
    OrderTooLarge(usize),
    #[error("sequence over Z_{found} used with a table for Z_{expected}")]
    GroupMismatch { expected: usize, found: usize },
    #[error("sequence does not sum to zero (sum is {0})")]
    NotZeroSum(usize),
    #[error("bad parameters: {0}")]
    BadParameters(String),
}

/// A zero-sum sequence over `Z_n`, stored as `multiplicity[g]` copies of `g`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ZeroSumSequence {
    order: usize,
    multiplicity: Vec<u64>,
}

impl ZeroSumSequence {
    pub fn new(order: usize, multiplicity: Vec<u64>) -> Result<Self, BlockError> {
        if multiplicity.len() != order {
            return Err(BlockError::GroupMismatch {
                expected: order,
                found: multiplicity.len(),
            });
        }
        let sum = weighted_sum(order, &multiplicity);
        if sum != 0 {
            return Err(BlockError::NotZeroSum(sum));
        }
        Ok(Self {
            order,
            multiplicity,
        })
    }

    /// Builds a sequence from group elements given as integers, reduced
    /// modulo `order` (so `-1` is the inverse of the generator).
    pub fn from_elements(order: usize, elements: &[i64]) -> Result<Self, BlockError> {
        if order == 0 {
            return Err(BlockError::OrderTooSmall(0));
        }
        let mut multiplicity = vec![0u64; order];
        for &g in elements {
            multiplicity[g.rem_euclid(order as i64) as usize] += 1;
        }
        Self::new(order, multiplicity)
    }

    pub fn empty(order: usize) -> Self {
        Self {
            order,
            multiplicity: vec![0; order],
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn multiplicity(&self) -> &[u64] {
        &self.multiplicity
    }

    /// Number of terms, counted with multiplicity.
    pub fn len(&self) -> u64 {
        self.multiplicity.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Whether `self` is a subsequence of `other`.
    pub fn divides(&self, other: &Self) -> bool {
        self.order == other.order
            && self
                .multiplicity
                .iter()
                .zip(&other.multiplicity)
                .all(|(a, b)| a <= b)
    }

    /// No proper nonempty subsequence sums to zero.
    pub fn is_minimal(&self) -> bool {
        !self.is_empty() && !has_proper_zero_sum_subsequence(self.order, &self.multiplicity)
    }
}

impl fmt::Display for ZeroSumSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "[]");
        }
        let mut first = true;
        for (g, &m) in self.multiplicity.iter().enumerate() {
            if m == 0 {
                continue;
            }
            if !first {
                write!(f, "·")?;
            }
            first = false;
            if m == 1 {
                write!(f, "({g})")?;
            } else {
                write!(f, "({g})^{m}")?;
            }
        }
        Ok(())
    }
}

fn weighted_sum(order: usize, multiplicity: &[u64]) -> usize {
    multiplicity.iter().enumerate().fold(0, |acc, (g, &m)| {
        (acc + g * (m % order as u64) as usize) % order
    })
}

fn has_proper_zero_sum_subsequence(order: usize, multiplicity: &[u64]) -> bool {
    let total: u64 = multiplicity.iter().sum();
    let mut sub = vec![0u64; order];
    // odometer over all sub-multiplicity vectors
    loop {
        let mut i = 0;
        while i < order {
            if sub[i] < multiplicity[i] {
                sub[i] += 1;
                break;
            }
            sub[i] = 0;
            i += 1;
        }
        if i == order {
            return false;
        }
        let size: u64 = sub.iter().sum();
        if size < total && weighted_sum(order, &sub) == 0 {
            return true;
        }
    }
}

/// The minimal zero-sum sequences over `Z_n`, sorted by length and then by
/// multiplicity vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AtomTable {
    order: usize,
    atoms: Vec<ZeroSumSequence>,
}

impl AtomTable {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn atoms(&self) -> &[ZeroSumSequence] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn index_of(&self, atom: &ZeroSumSequence) -> Option<usize> {
        self.atoms.iter().position(|a| a == atom)
    }

    /// Atoms that are subsequences of `a`.
    pub fn dividing(&self, a: &ZeroSumSequence) -> Vec<usize> {
        (0..self.atoms.len())
            .filter(|&i| self.atoms[i].divides(a))
            .collect()
    }
}

impl AtomEvaluation for AtomTable {
    type Element = ZeroSumSequence;

    fn atom_count(&self) -> usize {
        self.atoms.len()
    }

    fn evaluate(&self, factorization: &Factorization) -> ZeroSumSequence {
        let mut multiplicity = vec![0u64; self.order];
        for (atom, &c) in self.atoms.iter().zip(factorization.counts()) {
            for (m, &a) in multiplicity.iter_mut().zip(&atom.multiplicity) {
                *m += c * a;
            }
        }
        ZeroSumSequence {
            order: self.order,
            multiplicity,
        }
    }
}

fn check_order(n: usize) -> Result<(), BlockError> {
    if n < 3 {
        Err(BlockError::OrderTooSmall(n))
    } else if n > MAX_ORDER {
        Err(BlockError::OrderTooLarge(n))
    } else {
        Ok(())
    }
}

/// Every multiplicity vector over `Z_n` of total length at most `max_length`
/// whose terms sum to zero, including the empty sequence.
fn zero_sum_sequences(n: usize, max_length: u64) -> Vec<ZeroSumSequence> {
    fn go(
        n: usize,
        g: usize,
        left: u64,
        sum: usize,
        cur: &mut Vec<u64>,
        out: &mut Vec<ZeroSumSequence>,
    ) {
        if g == n {
            if sum == 0 {
                out.push(ZeroSumSequence {
                    order: n,
                    multiplicity: cur.clone(),
                });
            }
            return;
        }
        for m in 0..=left {
            cur[g] = m;
            go(n, g + 1, left - m, (sum + g * m as usize) % n, cur, out);
        }
        cur[g] = 0;
    }
    let mut out = Vec::new();
    go(n, 0, max_length, 0, &mut vec![0; n], &mut out);
    out
}

/// All minimal zero-sum sequences over `Z_n`, for `3 ≤ n ≤ MAX_ORDER`.
pub fn atoms(n: usize) -> Result<AtomTable, BlockError> {
    check_order(n)?;
    let mut atoms: Vec<ZeroSumSequence> = zero_sum_sequences(n, n as u64)
        .into_par_iter()
        .filter(ZeroSumSequence::is_minimal)
        .collect();
    atoms.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(AtomTable { order: n, atoms })
}

/// `Z(A)` as count vectors over the full atom table.
pub fn factorizations_block(
    table: &AtomTable,
    a: &ZeroSumSequence,
) -> Result<FactorizationSet<ZeroSumSequence>, BlockError> {
    if a.order != table.order {
        return Err(BlockError::GroupMismatch {
            expected: table.order,
            found: a.order,
        });
    }
    let dividing = table.dividing(a);
    let vectors: Vec<Vec<u64>> = dividing
        .iter()
        .map(|&i| table.atoms[i].multiplicity.clone())
        .collect();
    let found = enumerate(&vectors, &a.multiplicity)
        .into_iter()
        .map(|local| {
            let mut counts = vec![0u64; table.len()];
            for (&i, &c) in dividing.iter().zip(local.counts()) {
                counts[i] = c;
            }
            Factorization::new(counts)
        })
        .collect();
    Ok(FactorizationSet::new(a.clone(), found))
}

/// The sequence over `Z_n` (generator `g = 1`) with catenary degree `j`:
/// `(2g)²·g^(2n-4)` for `j = 2`, and `(-g)^(j-1)·g^n·h` with `h = (j-1)g`
/// for `3 ≤ j ≤ n`.
pub fn theorem_fullset_witness(n: usize, j: usize) -> Result<ZeroSumSequence, BlockError> {
    if n < 4 {
        return Err(BlockError::BadParameters(format!(
            "witnesses need n >= 4, got {n}"
        )));
    }
    if j < 2 || j > n {
        return Err(BlockError::BadParameters(format!(
            "witness index j must lie in [2, {n}], got {j}"
        )));
    }
    let mut multiplicity = vec![0u64; n];
    if j == 2 {
        multiplicity[2] = 2;
        multiplicity[1] = 2 * n as u64 - 4;
    } else {
        multiplicity[n - 1] += j as u64 - 1;
        multiplicity[1] += n as u64;
        multiplicity[(j - 1) % n] += 1;
    }
    ZeroSumSequence::new(n, multiplicity)
}

/// Catenary degrees attained by zero-sum sequences of length at most
/// `max_length`.
pub fn catenary_set_sample(n: usize, max_length: u64) -> Result<Vec<u64>, BlockError> {
    let table = atoms(n)?;
    catenary_set_sample_with(&table, max_length)
}

/// [`catenary_set_sample`] over an existing atom table.
pub fn catenary_set_sample_with(
    table: &AtomTable,
    max_length: u64,
) -> Result<Vec<u64>, BlockError> {
    let n = table.order;
    if max_length > 3 * n as u64 {
        return Err(BlockError::BadParameters(format!(
            "sample length {max_length} exceeds 3n = {}",
            3 * n
        )));
    }
    let values: BTreeSet<u64> = zero_sum_sequences(n, max_length)
        .into_par_iter()
        .map(|a| {
            let z = factorizations_block(table, &a).expect("same group");
            catenary_degree(&z).expect("every zero-sum sequence factors")
        })
        .collect();
    Ok(values.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(n: usize, elements: &[i64]) -> ZeroSumSequence {
        ZeroSumSequence::from_elements(n, elements).unwrap()
    }

    #[test]
    fn z4_atoms() {
        let t = atoms(4).unwrap();
        assert_eq!(t.len(), 7);
        for a in [
            seq(4, &[1, 1, 1, 1]),
            seq(4, &[2, 1, 1]),
            seq(4, &[2, 2]),
            seq(4, &[0]),
        ] {
            assert!(t.index_of(&a).is_some(), "missing {a}");
        }
        assert!(t.atoms().iter().all(|a| a.len() <= 4 && a.is_minimal()));
    }

    #[test]
    fn order_bounds() {
        assert_eq!(atoms(2), Err(BlockError::OrderTooSmall(2)));
        assert_eq!(atoms(11), Err(BlockError::OrderTooLarge(11)));
        assert_eq!(atoms(3).unwrap().len(), 4);
    }

    #[test]
    fn sequence_validation() {
        assert_eq!(
            ZeroSumSequence::from_elements(4, &[1, 2]),
            Err(BlockError::NotZeroSum(3))
        );
        assert!(matches!(
            ZeroSumSequence::new(4, vec![0, 0, 2]),
            Err(BlockError::GroupMismatch { .. })
        ));
        assert_eq!(seq(5, &[-1, 1]).multiplicity(), &[0, 1, 0, 0, 1]);
        assert!(!seq(4, &[1, 1, 1, 1, 2, 2]).is_minimal());
        assert!(!ZeroSumSequence::empty(4).is_minimal());
    }

    #[test]
    fn two_factorizations_of_j2_witness() {
        let t = atoms(4).unwrap();
        let a = seq(4, &[2, 2, 1, 1, 1, 1]);
        assert_eq!(theorem_fullset_witness(4, 2).unwrap(), a);
        let z = factorizations_block(&t, &a).unwrap();
        let u = t.index_of(&seq(4, &[1, 1, 1, 1])).unwrap();
        let v = t.index_of(&seq(4, &[2, 1, 1])).unwrap();
        let w = t.index_of(&seq(4, &[2, 2])).unwrap();
        let mut uw = vec![0u64; t.len()];
        uw[u] = 1;
        uw[w] = 1;
        let mut vv = vec![0u64; t.len()];
        vv[v] = 2;
        let expected = FactorizationSet::new(a.clone(), vec![uw.into(), vv.into()]);
        assert_eq!(z, expected);
        assert_eq!(catenary_degree(&z), Ok(2));
        for f in &z {
            assert_eq!(t.evaluate(f), a);
        }
    }

    #[test]
    fn j3_witness_over_z5() {
        let t = atoms(5).unwrap();
        let a = theorem_fullset_witness(5, 3).unwrap();
        assert_eq!(a, seq(5, &[-1, -1, 1, 1, 1, 1, 1, 2]));
        let z = factorizations_block(&t, &a).unwrap();
        let idx = |e: &[i64]| t.index_of(&seq(5, e)).unwrap();
        let (u, v, w, x) = (
            idx(&[1, 1, 1, 1, 1]),
            idx(&[1, -1]),
            idx(&[-1, -1, 2]),
            idx(&[1, 1, 1, 2]),
        );
        let mut uw = vec![0u64; t.len()];
        uw[u] = 1;
        uw[w] = 1;
        let mut v2x = vec![0u64; t.len()];
        v2x[v] = 2;
        v2x[x] = 1;
        assert_eq!(
            z,
            FactorizationSet::new(a.clone(), vec![uw.into(), v2x.into()])
        );
        assert_eq!(catenary_degree(&z), Ok(3));
        assert_eq!(t.dividing(&a).len(), 4);
    }

    #[test]
    fn witness_parameters() {
        assert_eq!(
            theorem_fullset_witness(4, 4).unwrap(),
            seq(4, &[3, 3, 3, 3, 1, 1, 1, 1])
        );
        assert!(matches!(
            theorem_fullset_witness(3, 2),
            Err(BlockError::BadParameters(_))
        ));
        assert!(matches!(
            theorem_fullset_witness(5, 1),
            Err(BlockError::BadParameters(_))
        ));
        assert!(matches!(
            theorem_fullset_witness(5, 6),
            Err(BlockError::BadParameters(_))
        ));
    }

    #[test]
    fn group_mismatch() {
        let t = atoms(4).unwrap();
        assert_eq!(
            factorizations_block(&t, &seq(5, &[1, 4])),
            Err(BlockError::GroupMismatch {
                expected: 4,
                found: 5
            })
        );
    }

    #[test]
    fn samples() {
        assert_eq!(catenary_set_sample(4, 8).unwrap(), vec![0, 2, 3, 4]);
        assert_eq!(catenary_set_sample(5, 1).unwrap(), vec![0]);
        assert!(matches!(
            catenary_set_sample(4, 13),
            Err(BlockError::BadParameters(_))
        ));
        assert_eq!(catenary_set_sample(2, 4), Err(BlockError::OrderTooSmall(2)));
    }

    #[test]
    fn atom_factorization_is_single() {
        let t = atoms(4).unwrap();
        for a in t.atoms() {
            let z = factorizations_block(&t, a).unwrap();
            assert_eq!(z.len(), 1);
            assert_eq!(catenary_degree(&z), Ok(0));
        }
    }
}
