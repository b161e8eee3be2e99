//! Explicit monoid families with known catenary data.
//!
//! Each constructor returns the monoid together with what is predicted for
//! it; checking the predictions is left to the caller.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::monoid::{gcd, MonoidError, NumericalMonoid};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("bad family parameters: {0}")]
    BadParameters(String),
    #[error("parameters give generators with gcd {0} > 1")]
    NotCoprime(i64),
    #[error("{0} is not a prime or is repeated")]
    NotDistinctPrimes(i64),
    #[error("need at least two primes, got {0}")]
    TooFew(usize),
    #[error(transparent)]
    Monoid(#[from] MonoidError),
}

/// An element with a predicted catenary degree and, when known, a predicted
/// number of factorizations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PredictedElement {
    pub element: i64,
    pub catenary: u64,
    pub factorization_count: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyPrediction {
    pub name: String,
    pub monoid: NumericalMonoid,
    /// Betti elements with their catenary degrees, sorted by element. Empty
    /// when the family makes no claim about them.
    pub predicted_betti: Vec<PredictedElement>,
    pub predicted_cset_members: BTreeSet<u64>,
    /// Whether `predicted_cset_members` is the whole catenary set or only a
    /// subset of it.
    pub cset_is_exact: bool,
    pub special_elements: Vec<PredictedElement>,
}

/// `<k, k + (c-2), ..., k + (k-1)(c-2)>`, whose catenary set is `{0, 2, c}`.
pub fn arithmetic_family(k: i64, c: i64) -> Result<FamilyPrediction, FamilyError> {
    if k < 3 || c < 3 {
        return Err(FamilyError::BadParameters(format!(
            "arithmetic family needs k >= 3 and c >= 3, got k={k}, c={c}"
        )));
    }
    let step = c - 2;
    let d = gcd(k, step);
    if d != 1 {
        return Err(FamilyError::NotCoprime(d));
    }
    let gens: Vec<i64> = (0..k).map(|i| k + i * step).collect();
    Ok(FamilyPrediction {
        name: format!("arithmetic(k={k}, c={c})"),
        monoid: NumericalMonoid::new(&gens)?,
        predicted_betti: Vec::new(),
        predicted_cset_members: BTreeSet::from([0, 2, c as u64]),
        cset_is_exact: true,
        special_elements: Vec::new(),
    })
}

/// `<2k+1, 6k-5, 6k-1>`, with Betti elements `(3k-1)n_1`, `(k+1)n_2`, `2n_3`
/// and elements `s_j = 6k² + (6j+1)k - 5j - 5` for `0 ≤ j ≤ k-2` having `j+2`
/// factorizations and catenary degree `3k-3-j`.
pub fn largecat_family(k: i64) -> Result<FamilyPrediction, FamilyError> {
    if k < 3 {
        return Err(FamilyError::BadParameters(format!(
            "large catenary family needs k >= 3, got {k}"
        )));
    }
    let (n1, n2, n3) = (2 * k + 1, 6 * k - 5, 6 * k - 1);
    let monoid = NumericalMonoid::new(&[n1, n2, n3])?;
    let k_u = k as u64;
    let mut predicted_betti = vec![
        PredictedElement {
            element: (3 * k - 1) * n1,
            catenary: 3 * k_u - 1,
            factorization_count: Some(2),
        },
        // v = s_0, two factorizations at distance 3k-3
        PredictedElement {
            element: (k + 1) * n2,
            catenary: 3 * k_u - 3,
            factorization_count: Some(2),
        },
        PredictedElement {
            element: 2 * n3,
            catenary: 4,
            factorization_count: Some(2),
        },
    ];
    predicted_betti.sort_by_key(|p| p.element);
    let special_elements = (0..=k - 2)
        .map(|j| PredictedElement {
            element: largecat_special_element(k, j),
            catenary: (3 * k - 3 - j) as u64,
            factorization_count: Some((j + 2) as usize),
        })
        .collect();
    let mut members: BTreeSet<u64> = BTreeSet::from([0, 4, 3 * k_u - 1]);
    members.extend((2 * k - 1..=3 * k - 3).map(|c| c as u64));
    Ok(FamilyPrediction {
        name: format!("largecat(k={k})"),
        monoid,
        predicted_betti,
        predicted_cset_members: members,
        cset_is_exact: false,
        special_elements,
    })
}

/// `s_j = 6k² + (6j+1)k - 5j - 5`.
pub fn largecat_special_element(k: i64, j: i64) -> i64 {
    6 * k * k + (6 * j + 1) * k - 5 * j - 5
}

/// The factorizations of `s_j` in `<2k+1, 6k-5, 6k-1>`: `(0, k+1+j, 0)`
/// followed by `(3k-1-3i, j+1-i, 2i-1)` for `1 ≤ i ≤ j+1`.
pub fn largecat_special_factorizations(k: i64, j: i64) -> Vec<[u64; 3]> {
    let mut out = vec![[0, (k + 1 + j) as u64, 0]];
    for i in 1..=j + 1 {
        out.push([
            (3 * k - 1 - 3 * i) as u64,
            (j + 1 - i) as u64,
            (2 * i - 1) as u64,
        ]);
    }
    out
}

/// `<P/p_k, ..., P/p_1>` for distinct primes with product `P`: a single Betti
/// element `P`, and catenary set `{0, p_k}`.
pub fn unique_betti_family(primes: &[i64]) -> Result<FamilyPrediction, FamilyError> {
    if primes.len() < 2 {
        return Err(FamilyError::TooFew(primes.len()));
    }
    let mut seen = BTreeSet::new();
    for &p in primes {
        if !is_prime(p) || !seen.insert(p) {
            return Err(FamilyError::NotDistinctPrimes(p));
        }
    }
    if primes.windows(2).any(|w| w[0] > w[1]) {
        return Err(FamilyError::BadParameters(
            "primes must be listed in ascending order".into(),
        ));
    }
    let product = primes
        .iter()
        .try_fold(1i64, |acc, &p| acc.checked_mul(p))
        .ok_or_else(|| FamilyError::BadParameters("prime product overflows".into()))?;
    let gens: Vec<i64> = primes.iter().map(|&p| product / p).collect();
    let largest = *primes.last().unwrap() as u64;
    Ok(FamilyPrediction {
        name: format!("unique-betti{primes:?}"),
        monoid: NumericalMonoid::new(&gens)?,
        predicted_betti: vec![PredictedElement {
            element: product,
            catenary: largest,
            factorization_count: Some(primes.len()),
        }],
        predicted_cset_members: BTreeSet::from([0, largest]),
        cset_is_exact: true,
        special_elements: Vec::new(),
    })
}

fn is_prime(p: i64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_instances() {
        let p = arithmetic_family(3, 3).unwrap();
        assert_eq!(p.monoid.generators(), &[3, 4, 5]);
        assert_eq!(p.predicted_cset_members, BTreeSet::from([0, 2, 3]));
        assert_eq!(
            arithmetic_family(3, 4).unwrap().monoid.generators(),
            &[3, 5, 7]
        );
        let p = arithmetic_family(4, 5).unwrap();
        assert_eq!(p.monoid.generators(), &[4, 7, 10, 13]);
        assert_eq!(p.predicted_cset_members, BTreeSet::from([0, 2, 5]));
        assert!(matches!(
            arithmetic_family(2, 5),
            Err(FamilyError::BadParameters(_))
        ));
        assert!(matches!(
            arithmetic_family(4, 2),
            Err(FamilyError::BadParameters(_))
        ));
        assert_eq!(arithmetic_family(4, 4), Err(FamilyError::NotCoprime(2)));
    }

    #[test]
    fn largecat_instances() {
        let p = largecat_family(5).unwrap();
        assert_eq!(p.monoid.generators(), &[11, 25, 29]);
        let betti: Vec<i64> = p.predicted_betti.iter().map(|b| b.element).collect();
        assert_eq!(betti, vec![58, 150, 154]);
        assert_eq!(p.special_elements[1].element, 175);
        assert_eq!(p.special_elements[1].catenary, 11);
        assert_eq!(p.special_elements[1].factorization_count, Some(3));

        let p = largecat_family(3).unwrap();
        assert_eq!(p.monoid.generators(), &[7, 13, 17]);
        let betti: Vec<i64> = p.predicted_betti.iter().map(|b| b.element).collect();
        assert_eq!(betti, vec![34, 52, 56]);
        assert_eq!(p.special_elements[0].element, 52);
        assert!(matches!(
            largecat_family(2),
            Err(FamilyError::BadParameters(_))
        ));
    }

    #[test]
    fn special_factorizations_evaluate() {
        for k in 3..=8 {
            let (n1, n2, n3) = (2 * k + 1, 6 * k - 5, 6 * k - 1);
            for j in 0..=k - 2 {
                let s = largecat_special_element(k, j);
                for [a, b, c] in largecat_special_factorizations(k, j) {
                    assert_eq!(a as i64 * n1 + b as i64 * n2 + c as i64 * n3, s);
                }
            }
        }
    }

    #[test]
    fn unique_betti_instances() {
        let p = unique_betti_family(&[2, 3, 5]).unwrap();
        assert_eq!(p.monoid.generators(), &[6, 10, 15]);
        assert_eq!(p.predicted_betti[0].element, 30);
        assert_eq!(p.predicted_cset_members, BTreeSet::from([0, 5]));
        let p = unique_betti_family(&[2, 3]).unwrap();
        assert_eq!(p.monoid.generators(), &[2, 3]);
        assert_eq!(p.predicted_cset_members, BTreeSet::from([0, 3]));
        let p = unique_betti_family(&[2, 3, 5, 7]).unwrap();
        assert_eq!(p.monoid.generators(), &[30, 42, 70, 105]);
        assert_eq!(unique_betti_family(&[2]), Err(FamilyError::TooFew(1)));
        assert_eq!(
            unique_betti_family(&[2, 4]),
            Err(FamilyError::NotDistinctPrimes(4))
        );
        assert_eq!(
            unique_betti_family(&[3, 3]),
            Err(FamilyError::NotDistinctPrimes(3))
        );
    }
}
