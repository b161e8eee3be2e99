//! Brute-force verification harness.
//!
//! Each check recomputes a known structural fact about catenary degrees,
//! Betti elements or delta sets and reports pass or fail. The oracles in this
//! module deliberately avoid the fast paths they are compared against:
//! factorizations by nested loops, catenary degrees by threshold
//! connectivity, membership by direct enumeration.

use std::collections::{BTreeSet, VecDeque};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use serde::Serialize;
use thiserror::Error;

use crate::block::{
    atoms, catenary_set_sample_with, factorizations_block, theorem_fullset_witness,
};
use crate::catenary::{
    betti_elements, betti_in_range, betti_via_cini, catenary_degree, catenary_set_scan,
    sandwich_with, BettiReport, CatenaryScan,
};
use crate::factorization::{delta_set_monoid, factorizations, Factorization, FactorizationSet};
use crate::families::{
    arithmetic_family, largecat_family, largecat_special_factorizations, unique_betti_family,
};
use crate::monoid::{gcd, membership_criterion_2gen, NumericalMonoid};

pub const SUITES: &[&str] = &["paper"];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown suite `{0}` (available: paper)")]
    UnknownSuite(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Largest `k` for the `<2k+1, 6k-5, 6k-1>` family.
    pub k_max: i64,
    /// Random 3- and 4-generated monoids in the sandwich sweep.
    pub random_monoids: usize,
    /// Random factorization sets for the catenary oracle.
    pub oracle_sets: usize,
    /// Random instances for the distance axioms.
    pub distance_instances: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            k_max: 8,
            random_monoids: 20,
            oracle_sets: 300,
            distance_instances: 2_000,
            seed: 0x5eed_cafe,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    /// The statement being checked.
    pub claim: String,
    pub passed: bool,
    pub detail: String,
}

type CheckResult = Result<String, String>;

fn outcome(name: &str, claim: &str, result: CheckResult) -> CheckOutcome {
    let (passed, detail) = match result {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    CheckOutcome {
        name: name.to_string(),
        claim: claim.to_string(),
        passed,
        detail,
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn run_suite(suite: &str, options: &VerifyOptions) -> Result<Vec<CheckOutcome>, VerifyError> {
    if suite != "paper" {
        return Err(VerifyError::UnknownSuite(suite.to_string()));
    }
    let mut rng = StdRng::seed_from_u64(options.seed);
    let sample = random_monoid_sample(&mut rng, options.random_monoids, 60);
    let mut out = vec![
        outcome(
            "example-450",
            "c(450) = 16 in <11,36,39>, with (6,2,8) and (24,3,2) in Z(450)",
            check_example_450(),
        ),
        outcome(
            "example-11-25-29",
            "Betti(<11,25,29>) = {58,150,154} with catenary degrees 4, 12, 14; c(175) = 11",
            check_example_11_25_29(),
        ),
    ];
    let sweeps: Vec<SweepData> = sample.iter().map(SweepData::new).collect();
    out.push(outcome(
        "sandwich",
        "min c(b) <= c(n) <= max c(b) over Betti elements b dividing n",
        check_sandwich_sweep(&sweeps),
    ));
    out.push(outcome(
        "min-max-at-betti",
        "the least nonzero and the largest catenary degree occur at Betti elements",
        check_min_max_at_betti(&sweeps),
    ));
    out.push(outcome(
        "two-value-classification",
        "C(S) = {0, c} exactly when every Betti element has catenary degree c",
        check_two_value_classification(&sweeps),
    ));
    out.push(outcome(
        "no-catenary-one",
        "1 is never a catenary degree",
        ensure(sweeps.iter().all(|s| !s.scan.cset.contains(&1)), || {
            "found catenary degree 1".into()
        })
        .map(|_| format!("{} monoids", sweeps.len())),
    ));
    out.push(outcome(
        "betti-bound",
        "no Betti element lies beyond F(S) + 2 n_k",
        check_betti_bound(&sample),
    ));
    out.push(outcome(
        "arithmetic-family",
        "C(<k, k+(c-2), ..., k+(k-1)(c-2)>) = {0, 2, c}",
        check_arithmetic_family(),
    ));
    out.push(outcome(
        "largecat-family",
        "<2k+1, 6k-5, 6k-1>: Betti {(3k-1)n1, (k+1)n2, 2n3}, c(s_j) = 3k-3-j with j+2 factorizations",
        check_largecat_family(options.k_max),
    ));
    out.push(outcome(
        "unique-betti-family",
        "<P/p_k, ..., P/p_1> has one Betti element and C(S) = {0, p_k}",
        check_unique_betti_family(),
    ));
    out.push(outcome(
        "delta-set-remark",
        "<30,52,55>: Betti {260,330}, delta sets {2} and {5}, monoid delta set {1,2,3,5}",
        check_delta_remark(),
    ));
    out.push(outcome(
        "block-monoid",
        "C(B(Z_n)) = {0, 2, ..., n} with the explicit witnesses",
        check_block_monoid(),
    ));
    out.push(outcome(
        "oracle-catenary",
        "union-find bottleneck equals threshold-connectivity catenary degree",
        check_catenary_oracle(&mut rng, options.oracle_sets),
    ));
    out.push(outcome(
        "oracle-factorizations",
        "factorization enumeration equals nested-loop enumeration",
        check_factorization_oracle(&mut rng, 20),
    ));
    out.push(outcome(
        "oracle-betti-cini",
        "Betti elements of 3-generated monoids are among the c_i n_i",
        check_cini_oracle(&mut rng, 30),
    ));
    out.push(outcome(
        "oracle-membership",
        "membership agrees with the two-generator criterion",
        check_membership_oracle(&mut rng, 20),
    ));
    out.push(outcome(
        "distance-axioms",
        "distance is symmetric, translation invariant, satisfies the triangle inequality, and is >= 2 between distinct factorizations of one element",
        check_distance_axioms(&mut rng, options.distance_instances),
    ));
    Ok(out)
}

/// The default scan window `F(S) + 2·n_k + 200`.
pub fn default_window(s: &NumericalMonoid) -> i64 {
    s.betti_search_bound() + 200
}

/// Random minimal generating sets with 3 or 4 generators, each at most
/// `max_generator`. Invalid draws are discarded.
pub fn random_monoid_sample(
    rng: &mut StdRng,
    count: usize,
    max_generator: i64,
) -> Vec<NumericalMonoid> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let k = rng.gen_range(3..=4);
        let gens: Vec<i64> = (0..k).map(|_| rng.gen_range(3..=max_generator)).collect();
        if let Ok(s) = NumericalMonoid::new(&gens) {
            if s.embedding_dimension() == k {
                out.push(s);
            }
        }
    }
    out
}

/// Catenary degree from the definition: the least threshold `N` among the
/// attained distances for which the graph of edges of weight at most `N` is
/// connected, tested by breadth-first search.
pub fn threshold_catenary(z: &[Factorization]) -> u64 {
    if z.len() <= 1 {
        return 0;
    }
    let dist = |a: &Factorization, b: &Factorization| -> u64 {
        let common: u64 = a
            .counts()
            .iter()
            .zip(b.counts())
            .map(|(x, y)| *x.min(y))
            .sum();
        (a.length() - common).max(b.length() - common)
    };
    let mut thresholds: Vec<u64> = Vec::new();
    for i in 0..z.len() {
        for j in i + 1..z.len() {
            thresholds.push(dist(&z[i], &z[j]));
        }
    }
    thresholds.sort_unstable();
    thresholds.dedup();
    for &t in &thresholds {
        let mut seen = vec![false; z.len()];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for u in 0..z.len() {
                if !seen[u] && dist(&z[v], &z[u]) <= t {
                    seen[u] = true;
                    reached += 1;
                    queue.push_back(u);
                }
            }
        }
        if reached == z.len() {
            return t;
        }
    }
    unreachable!("the largest distance connects the complete graph")
}

/// Factorizations of `n` by nested loops over every coordinate, for at most
/// four generators.
pub fn nested_loop_factorizations(gens: &[i64], n: i64) -> Vec<Vec<u64>> {
    assert!(
        gens.len() <= 4,
        "nested loops cover at most four generators"
    );
    let mut g = gens.to_vec();
    g.resize(4, 0);
    // an absent generator contributes a single zero coefficient
    let upto = |rem: i64, x: i64| if x == 0 { 0 } else { rem / x };
    let mut out = Vec::new();
    for a in 0..=upto(n, g[0]) {
        let ra = n - a * g[0];
        for b in 0..=upto(ra, g[1]) {
            let rb = ra - b * g[1];
            for c in 0..=upto(rb, g[2]) {
                let rc = rb - c * g[2];
                for d in 0..=upto(rc, g[3]) {
                    if rc - d * g[3] == 0 {
                        let v = [a as u64, b as u64, c as u64, d as u64];
                        out.push(v[..gens.len()].to_vec());
                    }
                }
            }
        }
    }
    out.sort();
    out
}

struct SweepData {
    monoid: NumericalMonoid,
    report: BettiReport,
    scan: CatenaryScan,
}

impl SweepData {
    fn new(s: &NumericalMonoid) -> Self {
        Self {
            monoid: s.clone(),
            report: betti_elements(s),
            scan: catenary_set_scan(s, default_window(s)),
        }
    }
}

fn check_example_450() -> CheckResult {
    let s = NumericalMonoid::new(&[11, 36, 39]).map_err(|e| e.to_string())?;
    let z = factorizations(&s, 450).map_err(|e| e.to_string())?;
    for v in [[6, 2, 8], [24, 3, 2]] {
        ensure(z.contains(&Factorization::new(v.to_vec())), || {
            format!("{v:?} missing from Z(450)")
        })?;
    }
    let c = catenary_degree(&z).map_err(|e| e.to_string())?;
    ensure(c == 16, || format!("c(450) = {c}"))?;
    Ok(format!("|Z(450)| = {}, c(450) = {c}", z.len()))
}

fn check_example_11_25_29() -> CheckResult {
    let s = NumericalMonoid::new(&[11, 25, 29]).map_err(|e| e.to_string())?;
    let report = betti_elements(&s);
    ensure(report.elements() == [58, 150, 154], || {
        format!("Betti elements {:?}", report.elements())
    })?;
    ensure(report.catenary_degrees() == [4, 12, 14], || {
        format!("Betti catenary degrees {:?}", report.catenary_degrees())
    })?;
    let c = catenary_degree(&factorizations(&s, 175).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    ensure(c == 11, || format!("c(175) = {c}"))?;
    Ok("Betti {58,150,154} -> {4,12,14}, c(175) = 11".into())
}

fn check_sandwich_sweep(sweeps: &[SweepData]) -> CheckResult {
    let mut checked = 0usize;
    for sweep in sweeps {
        for (&n, &c) in &sweep.scan.per_element {
            if sweep.scan.factorization_counts[&n] < 2 {
                continue;
            }
            let check =
                sandwich_with(&sweep.monoid, &sweep.report, n, c).map_err(|e| e.to_string())?;
            ensure(check.ok, || format!("{} at n={n}: {check:?}", sweep.monoid))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} elements over {} monoids", sweeps.len()))
}

fn check_min_max_at_betti(sweeps: &[SweepData]) -> CheckResult {
    for sweep in sweeps {
        let betti: BTreeSet<u64> = sweep.report.catenary_degrees().into_iter().collect();
        let min = sweep.scan.min_nonzero();
        let max = sweep.scan.max();
        ensure(min.is_some_and(|m| betti.contains(&m)), || {
            format!(
                "{}: min nonzero {min:?} not among Betti degrees {betti:?}",
                sweep.monoid
            )
        })?;
        ensure(betti.contains(&max), || {
            format!(
                "{}: max {max} not among Betti degrees {betti:?}",
                sweep.monoid
            )
        })?;
        ensure(
            betti.first() == min.as_ref() && betti.last() == Some(&max),
            || {
                format!(
                    "{}: extremes differ from Betti extremes {betti:?}",
                    sweep.monoid
                )
            },
        )?;
    }
    Ok(format!("{} monoids", sweeps.len()))
}

fn check_two_value_classification(sweeps: &[SweepData]) -> CheckResult {
    let mut two_valued = 0;
    for sweep in sweeps {
        let betti: BTreeSet<u64> = sweep.report.catenary_degrees().into_iter().collect();
        let single = betti.len() == 1;
        let cset_two = sweep.scan.cset.len() == 2;
        ensure(single == cset_two, || {
            format!(
                "{}: Betti degrees {betti:?} but catenary set {:?}",
                sweep.monoid, sweep.scan.cset
            )
        })?;
        two_valued += usize::from(single);
    }
    Ok(format!(
        "{} monoids, {two_valued} with a two-value set",
        sweeps.len()
    ))
}

fn check_betti_bound(sample: &[NumericalMonoid]) -> CheckResult {
    for s in sample {
        let bound = s.betti_search_bound();
        let extra = betti_in_range(s, bound + 1, bound + 500);
        ensure(extra.is_empty(), || {
            format!(
                "{s}: Betti element {} beyond bound {bound}",
                extra[0].element
            )
        })?;
    }
    Ok(format!("{} monoids, 500 past each bound", sample.len()))
}

fn check_arithmetic_family() -> CheckResult {
    let mut count = 0;
    for k in 3..=5 {
        for c in 3..=6 {
            if gcd(k, c - 2) != 1 {
                continue;
            }
            let p = arithmetic_family(k, c).map_err(|e| e.to_string())?;
            let scan = catenary_set_scan(&p.monoid, default_window(&p.monoid));
            let got: BTreeSet<u64> = scan.cset.iter().copied().collect();
            ensure(got == p.predicted_cset_members, || {
                format!("{}: catenary set {got:?}", p.name)
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} parameter pairs"))
}

fn check_largecat_family(k_max: i64) -> CheckResult {
    for k in 3..=k_max {
        let p = largecat_family(k).map_err(|e| e.to_string())?;
        let report = betti_elements(&p.monoid);
        let predicted: Vec<i64> = p.predicted_betti.iter().map(|b| b.element).collect();
        ensure(report.elements() == predicted, || {
            format!(
                "k={k}: Betti {:?}, predicted {predicted:?}",
                report.elements()
            )
        })?;
        for b in &p.predicted_betti {
            let got = report.get(b.element).map(|r| r.catenary);
            ensure(got == Some(b.catenary), || {
                format!(
                    "k={k}: c({}) = {got:?}, predicted {}",
                    b.element, b.catenary
                )
            })?;
        }
        for (j, e) in p.special_elements.iter().enumerate() {
            let z = factorizations(&p.monoid, e.element).map_err(|e| e.to_string())?;
            ensure(Some(z.len()) == e.factorization_count, || {
                format!("k={k}: |Z(s_{j})| = {}", z.len())
            })?;
            let listed: Vec<Factorization> = largecat_special_factorizations(k, j as i64)
                .into_iter()
                .map(|v| Factorization::new(v.to_vec()))
                .collect();
            ensure(listed.iter().all(|f| z.contains(f)), || {
                format!("k={k}: listed factorizations of s_{j} missing")
            })?;
            let c = catenary_degree(&z).map_err(|e| e.to_string())?;
            ensure(c == e.catenary, || {
                format!("k={k}: c(s_{j}) = {c}, predicted {}", e.catenary)
            })?;
        }
    }
    Ok(format!("k = 3..={k_max}"))
}

fn check_unique_betti_family() -> CheckResult {
    for primes in [&[2, 3][..], &[2, 3, 5], &[2, 3, 5, 7]] {
        let p = unique_betti_family(primes).map_err(|e| e.to_string())?;
        let report = betti_elements(&p.monoid);
        ensure(report.betti.len() == 1, || {
            format!("{primes:?}: Betti elements {:?}", report.elements())
        })?;
        let scan = catenary_set_scan(&p.monoid, default_window(&p.monoid));
        let got: BTreeSet<u64> = scan.cset.iter().copied().collect();
        ensure(got == p.predicted_cset_members, || {
            format!("{primes:?}: catenary set {got:?}")
        })?;
    }
    Ok("{2,3}, {2,3,5}, {2,3,5,7}".into())
}

fn check_delta_remark() -> CheckResult {
    let s = NumericalMonoid::new(&[30, 52, 55]).map_err(|e| e.to_string())?;
    let report = betti_elements(&s);
    ensure(report.elements() == [260, 330], || {
        format!("Betti {:?}", report.elements())
    })?;
    let d260 = report.betti[0]
        .factorizations
        .delta_set()
        .map_err(|e| e.to_string())?;
    let d330 = report.betti[1]
        .factorizations
        .delta_set()
        .map_err(|e| e.to_string())?;
    ensure(d260 == [2] && d330 == [5], || {
        format!("delta sets {d260:?}, {d330:?}")
    })?;
    let window = default_window(&s);
    let delta = delta_set_monoid(&s, window);
    ensure(delta == [1, 2, 3, 5], || {
        format!("monoid delta set {delta:?}")
    })?;
    Ok(format!("window {window}"))
}

fn check_block_monoid() -> CheckResult {
    for n in 4..=6usize {
        let table = atoms(n).map_err(|e| e.to_string())?;
        let sample = catenary_set_sample_with(&table, 2 * n as u64).map_err(|e| e.to_string())?;
        let expected: Vec<u64> = std::iter::once(0).chain(2..=n as u64).collect();
        ensure(sample == expected, || format!("n={n}: sampled {sample:?}"))?;
        for j in 2..=n {
            let a = theorem_fullset_witness(n, j).map_err(|e| e.to_string())?;
            let z = factorizations_block(&table, &a).map_err(|e| e.to_string())?;
            let c = catenary_degree(&z).map_err(|e| e.to_string())?;
            ensure(c == j as u64, || {
                format!("n={n}, j={j}: witness {a} has c = {c}")
            })?;
            ensure(z.len() == 2, || {
                format!("n={n}, j={j}: |Z(A)| = {}", z.len())
            })?;
        }
    }
    Ok("n = 4, 5, 6".into())
}

/// A random `Z(n)` with `n ≤ 300` in a monoid with generators in `[5, 40]`,
/// redrawn until it has at most 400 members.
fn random_factorization_set(rng: &mut StdRng) -> (NumericalMonoid, FactorizationSet) {
    loop {
        let k = rng.gen_range(3..=4);
        let gens: Vec<i64> = (0..k).map(|_| rng.gen_range(5..=40)).collect();
        let Ok(s) = NumericalMonoid::new(&gens) else {
            continue;
        };
        let n = rng.gen_range(0..=300);
        let z = factorizations(&s, n).expect("nonnegative");
        if !z.is_empty() && z.len() <= 400 {
            return (s, z);
        }
    }
}

fn check_catenary_oracle(rng: &mut StdRng, count: usize) -> CheckResult {
    for _ in 0..count {
        let (s, z) = random_factorization_set(rng);
        let fast = catenary_degree(&z).map_err(|e| e.to_string())?;
        let slow = threshold_catenary(z.factorizations());
        ensure(fast == slow, || {
            format!(
                "{s}, n={}: union-find {fast}, threshold {slow}",
                z.element()
            )
        })?;
    }
    Ok(format!("{count} factorization sets"))
}

fn check_factorization_oracle(rng: &mut StdRng, monoids: usize) -> CheckResult {
    for _ in 0..monoids {
        let s = &random_monoid_sample(rng, 1, 40)[0];
        for n in 0..=500 {
            let got: Vec<Vec<u64>> = factorizations(s, n)
                .map_err(|e| e.to_string())?
                .iter()
                .map(|f| f.counts().to_vec())
                .collect();
            let want = nested_loop_factorizations(s.generators(), n);
            ensure(got == want, || format!("{s}, n={n}: sets differ"))?;
        }
    }
    Ok(format!("{monoids} monoids, n <= 500"))
}

fn check_cini_oracle(rng: &mut StdRng, count: usize) -> CheckResult {
    let mut done = 0;
    while done < count {
        let s = &random_monoid_sample(rng, 1, 60)[0];
        if s.embedding_dimension() != 3 {
            continue;
        }
        let cini: BTreeSet<i64> = betti_via_cini(s)
            .map_err(|e| e.to_string())?
            .into_iter()
            .collect();
        let scanned = betti_elements(s).elements();
        ensure(scanned.iter().all(|b| cini.contains(b)), || {
            format!("{s}: scanned {scanned:?} not within {cini:?}")
        })?;
        done += 1;
    }
    Ok(format!("{count} monoids"))
}

fn check_membership_oracle(rng: &mut StdRng, count: usize) -> CheckResult {
    let mut done = 0;
    while done < count {
        let (a, b) = (rng.gen_range(2..=40), rng.gen_range(2..=40));
        if a == b || gcd(a, b) != 1 {
            continue;
        }
        let s = NumericalMonoid::new(&[a, b]).map_err(|e| e.to_string())?;
        for n in -10..=a * b {
            let lemma = membership_criterion_2gen(a, b, n).map_err(|e| e.to_string())?;
            ensure(lemma == s.contains(n), || format!("<{a},{b}>, n={n}"))?;
        }
        done += 1;
    }
    Ok(format!("{count} coprime pairs"))
}

fn check_distance_axioms(rng: &mut StdRng, count: usize) -> CheckResult {
    let mut done = 0;
    while done < count {
        let (_, z) = random_factorization_set(rng);
        let fs = z.factorizations();
        let a = fs.choose(rng).unwrap();
        let b = fs.choose(rng).unwrap();
        let c = fs.choose(rng).unwrap();
        let shift = Factorization::new((0..a.dimension()).map(|_| rng.gen_range(0..4)).collect());
        let d = |x: &Factorization, y: &Factorization| x.distance(y).unwrap();
        ensure(d(a, b) == d(b, a), || format!("asymmetric at {a}, {b}"))?;
        ensure((d(a, b) == 0) == (a == b), || {
            format!("identity fails at {a}, {b}")
        })?;
        ensure(d(a, c) <= d(a, b) + d(b, c), || {
            format!("triangle fails at {a}, {b}, {c}")
        })?;
        let (a2, b2) = (
            a.checked_add(&shift).unwrap(),
            b.checked_add(&shift).unwrap(),
        );
        ensure(d(&a2, &b2) == d(a, b), || {
            format!("translation fails at {a}, {b}")
        })?;
        ensure(a == b || d(a, b) >= 2, || {
            format!("distinct {a}, {b} at distance < 2")
        })?;
        done += 1;
    }
    Ok(format!("{count} instances"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite() {
        assert_eq!(
            run_suite("nope", &VerifyOptions::default()),
            Err(VerifyError::UnknownSuite("nope".into()))
        );
    }

    #[test]
    fn oracles_on_small_cases() {
        assert_eq!(
            nested_loop_factorizations(&[11, 25, 29], 175),
            vec![vec![0, 7, 0], vec![8, 0, 3], vec![11, 1, 1]]
        );
        let s = NumericalMonoid::new(&[11, 36, 39]).unwrap();
        let z = factorizations(&s, 450).unwrap();
        assert_eq!(threshold_catenary(z.factorizations()), 16);
    }

    #[test]
    fn random_sample_is_deterministic() {
        let a = random_monoid_sample(&mut StdRng::seed_from_u64(7), 5, 60);
        let b = random_monoid_sample(&mut StdRng::seed_from_u64(7), 5, 60);
        assert_eq!(a, b);
        assert!(a.iter().all(|s| (3..=4).contains(&s.embedding_dimension())));
    }
}
