//! Naive reference implementations used as oracles by the integration tests.
//! None of them call into the library's algorithms.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use rand::rngs::StdRng;
use rand::Rng;

pub fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// All `(a_1, ..., a_k)` with `Σ a_i·g_i = n`, by recursion on the first
/// coordinate, in lexicographic order.
pub fn factorizations(gens: &[i64], n: i64) -> Vec<Vec<u64>> {
    fn go(gens: &[i64], n: i64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        match gens.split_first() {
            None => {
                if n == 0 {
                    out.push(prefix.clone());
                }
            }
            Some((&g, rest)) => {
                for a in 0..=n / g {
                    prefix.push(a as u64);
                    go(rest, n - a * g, prefix, out);
                    prefix.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    if n >= 0 {
        go(gens, n, &mut Vec::new(), &mut out);
    }
    out
}

/// Membership sieve on `[0, bound]`.
pub fn membership_table(gens: &[i64], bound: i64) -> Vec<bool> {
    let mut member = vec![false; bound as usize + 1];
    member[0] = true;
    for n in 1..=bound {
        member[n as usize] = gens.iter().any(|&g| g <= n && member[(n - g) as usize]);
    }
    member
}

pub fn frobenius(gens: &[i64]) -> i64 {
    let bound = gens.iter().product::<i64>().min(200_000);
    let member = membership_table(gens, bound);
    (0..=bound)
        .rev()
        .find(|&n| !member[n as usize])
        .unwrap_or(-1)
}

pub fn length(a: &[u64]) -> u64 {
    a.iter().sum()
}

pub fn distance(a: &[u64], b: &[u64]) -> u64 {
    let common: u64 = a.iter().zip(b).map(|(x, y)| *x.min(y)).sum();
    (length(a) - common).max(length(b) - common)
}

fn connected_at(z: &[Vec<u64>], edge: impl Fn(&[u64], &[u64]) -> bool) -> usize {
    let mut component = vec![usize::MAX; z.len()];
    let mut count = 0;
    for start in 0..z.len() {
        if component[start] != usize::MAX {
            continue;
        }
        component[start] = count;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for u in 0..z.len() {
                if component[u] == usize::MAX && edge(&z[v], &z[u]) {
                    component[u] = count;
                    queue.push_back(u);
                }
            }
        }
        count += 1;
    }
    count
}

/// The least attained distance `N` whose threshold graph is connected.
pub fn catenary(z: &[Vec<u64>]) -> u64 {
    if z.len() <= 1 {
        return 0;
    }
    let thresholds: BTreeSet<u64> = z
        .iter()
        .enumerate()
        .flat_map(|(i, a)| z[i + 1..].iter().map(move |b| distance(a, b)))
        .collect();
    thresholds
        .into_iter()
        .find(|&t| connected_at(z, |a, b| distance(a, b) <= t) == 1)
        .expect("the largest distance connects everything")
}

/// Number of components of the graph joining factorizations that share an atom.
pub fn nabla_components(z: &[Vec<u64>]) -> usize {
    connected_at(z, |a, b| a.iter().zip(b).any(|(x, y)| *x > 0 && *y > 0))
}

/// Elements of `[1, bound]` whose shared-atom graph is disconnected.
pub fn betti(gens: &[i64], bound: i64) -> Vec<i64> {
    (1..=bound)
        .filter(|&n| {
            let z = factorizations(gens, n);
            z.len() > 1 && nabla_components(&z) > 1
        })
        .collect()
}

/// Successive differences of the sorted distinct lengths of `z`.
pub fn delta(z: &[Vec<u64>]) -> BTreeSet<u64> {
    let lengths: BTreeSet<u64> = z.iter().map(|a| length(a)).collect();
    let lengths: Vec<u64> = lengths.into_iter().collect();
    lengths.windows(2).map(|w| w[1] - w[0]).collect()
}

/// A random minimal generating set with `k` generators in `[3, max]`.
pub fn random_generators(rng: &mut StdRng, k: usize, max: i64) -> Vec<i64> {
    loop {
        let mut gens: Vec<i64> = (0..k).map(|_| rng.gen_range(3..=max)).collect();
        gens.sort_unstable();
        gens.dedup();
        if gens.len() != k || gens.iter().fold(0, |d, &g| gcd(d, g)) != 1 {
            continue;
        }
        let minimal = gens.iter().enumerate().all(|(i, &g)| {
            let others: Vec<i64> = gens
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &h)| h)
                .collect();
            !membership_table(&others, g)[g as usize]
        });
        if minimal {
            return gens;
        }
    }
}
