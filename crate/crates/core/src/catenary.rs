//! Catenary degrees, the ∇ graph, and Betti elements.
//!
//! The catenary degree of `n` is the bottleneck weight of the complete graph
//! on `Z(n)` weighted by factorization distance: the largest edge of a
//! minimum spanning tree. For a single factorization set it is found by
//! Kruskal's algorithm on the complete graph; over a numerical monoid the
//! trees are built incrementally from those of smaller elements.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::factorization::{factorizations, Factorization, FactorizationError, FactorizationSet};
use crate::monoid::NumericalMonoid;
use crate::spanning;
use crate::union_find::UnionFind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatenaryError {
    #[error("factorization set is empty (the element is not in the monoid)")]
    EmptySet,
    #[error("chain is empty")]
    EmptyChain,
    #[error("factorization {0} is not in the factorization set")]
    FactorizationNotInSet(Factorization),
    #[error("expected exactly 3 generators, found {0}")]
    NotEmbeddingDimension3(usize),
    #[error("{0} is not an element of the monoid")]
    NotAnElement(i64),
    #[error("{0} factors uniquely, so the bound is vacuous")]
    UniqueFactorization(i64),
    #[error(transparent)]
    Factorization(#[from] FactorizationError),
}

/// The complete graph on a factorization set, weighted by distance.
#[derive(Debug, Clone)]
pub struct DistanceGraph<'a, E = i64> {
    vertices: &'a FactorizationSet<E>,
    /// `(weight, i, j)` with `i < j`, sorted by weight.
    edges: Vec<(u64, u32, u32)>,
}

impl<'a, E> DistanceGraph<'a, E> {
    pub fn new(vertices: &'a FactorizationSet<E>) -> Self {
        let fs = vertices.factorizations();
        let m = fs.len();
        let mut edges = Vec::with_capacity(m * m.saturating_sub(1) / 2);
        for i in 0..m {
            for j in i + 1..m {
                edges.push((fs[i].distance_unchecked(&fs[j]), i as u32, j as u32));
            }
        }
        edges.sort_unstable();
        Self { vertices, edges }
    }

    pub fn vertices(&self) -> &FactorizationSet<E> {
        self.vertices
    }

    pub fn edges(&self) -> &[(u64, u32, u32)] {
        &self.edges
    }

    /// Weight of the edge whose insertion, in ascending order, first
    /// connects the graph. Zero for a single vertex.
    pub fn bottleneck(&self) -> u64 {
        let m = self.vertices.len();
        let mut uf = UnionFind::new(m);
        for &(w, i, j) in &self.edges {
            if uf.union(i as usize, j as usize) && uf.component_count() == 1 {
                return w;
            }
        }
        0
    }

    /// A shortest (in hops) `N`-chain from `from` to `to`, if one exists.
    pub fn find_chain(
        &self,
        from: &Factorization,
        to: &Factorization,
        bound: u64,
    ) -> Result<Option<Vec<Factorization>>, CatenaryError> {
        let start = self.index_of(from)?;
        let goal = self.index_of(to)?;
        let fs = self.vertices.factorizations();
        let m = fs.len();
        let mut adjacency = vec![Vec::new(); m];
        for &(_, i, j) in self.edges.iter().take_while(|e| e.0 <= bound) {
            adjacency[i as usize].push(j as usize);
            adjacency[j as usize].push(i as usize);
        }
        let mut parent: Vec<Option<usize>> = vec![None; m];
        let mut seen = vec![false; m];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            if v == goal {
                let mut path = vec![fs[v].clone()];
                let mut cur = v;
                while let Some(p) = parent[cur] {
                    path.push(fs[p].clone());
                    cur = p;
                }
                path.reverse();
                return Ok(Some(path));
            }
            for &u in &adjacency[v] {
                if !seen[u] {
                    seen[u] = true;
                    parent[u] = Some(v);
                    queue.push_back(u);
                }
            }
        }
        Ok(None)
    }

    fn index_of(&self, a: &Factorization) -> Result<usize, CatenaryError> {
        self.vertices
            .position(a)
            .ok_or_else(|| CatenaryError::FactorizationNotInSet(a.clone()))
    }
}

/// `c(n)` for the element whose factorizations are `z`.
pub fn catenary_degree<E>(z: &FactorizationSet<E>) -> Result<u64, CatenaryError> {
    match z.len() {
        0 => Err(CatenaryError::EmptySet),
        1 => Ok(0),
        _ => Ok(DistanceGraph::new(z).bottleneck()),
    }
}

/// Whether consecutive members of `chain` are within distance `bound`.
pub fn verify_nchain<E>(
    z: &FactorizationSet<E>,
    chain: &[Factorization],
    bound: u64,
) -> Result<bool, CatenaryError> {
    if chain.is_empty() {
        return Err(CatenaryError::EmptyChain);
    }
    if let Some(a) = chain.iter().find(|a| !z.contains(a)) {
        return Err(CatenaryError::FactorizationNotInSet(a.clone()));
    }
    Ok(chain
        .windows(2)
        .all(|w| w[0].distance_unchecked(&w[1]) <= bound))
}

/// Number of connected components of `∇_n`, where two factorizations are
/// adjacent when they share an atom.
pub fn nabla_components<E>(z: &FactorizationSet<E>) -> Result<usize, CatenaryError> {
    if z.is_empty() {
        return Err(CatenaryError::EmptySet);
    }
    let fs = z.factorizations();
    let mut uf = UnionFind::new(fs.len());
    // first factorization seen using each atom
    let mut owner: Vec<Option<usize>> = vec![None; fs[0].dimension()];
    for (i, a) in fs.iter().enumerate() {
        for atom in a.support() {
            match owner[atom] {
                Some(j) => {
                    uf.union(i, j);
                }
                None => owner[atom] = Some(i),
            }
        }
    }
    Ok(uf.component_count())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiRecord {
    pub element: i64,
    pub factorizations: FactorizationSet,
    pub catenary: u64,
    pub components: usize,
}

/// Betti elements of a monoid, complete up to `search_bound`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiReport {
    pub monoid: NumericalMonoid,
    pub betti: Vec<BettiRecord>,
    pub search_bound: i64,
}

impl BettiReport {
    pub fn elements(&self) -> Vec<i64> {
        self.betti.iter().map(|r| r.element).collect()
    }

    pub fn catenary_degrees(&self) -> Vec<u64> {
        self.betti.iter().map(|r| r.catenary).collect()
    }

    pub fn get(&self, element: i64) -> Option<&BettiRecord> {
        self.betti.iter().find(|r| r.element == element)
    }

    pub fn is_betti(&self, element: i64) -> bool {
        self.get(element).is_some()
    }
}

/// Scans `[1, F(S) + 2·n_k]` for elements whose ∇ graph is disconnected.
pub fn betti_elements(s: &NumericalMonoid) -> BettiReport {
    let search_bound = s.betti_search_bound();
    let betti = betti_in_range(s, 1, search_bound);
    BettiReport {
        monoid: s.clone(),
        betti,
        search_bound,
    }
}

/// Betti records for every element of `[from, to]`, in increasing order.
pub fn betti_in_range(s: &NumericalMonoid, from: i64, to: i64) -> Vec<BettiRecord> {
    (from.max(1)..=to)
        .into_par_iter()
        .filter(|&n| s.contains(n))
        .filter_map(|n| {
            let z = factorizations(s, n).ok()?;
            let components = nabla_components(&z).ok()?;
            if components < 2 {
                return None;
            }
            let catenary = catenary_degree(&z).ok()?;
            Some(BettiRecord {
                element: n,
                factorizations: z,
                catenary,
                components,
            })
        })
        .collect()
}

/// For a 3-generated monoid, the distinct values `c_i·n_i` with
/// `c_i = min{c > 0 : c·n_i ∈ <n_j, n_k>}`.
///
/// Every Betti element of such a monoid has this form, so the result is a
/// superset of the Betti elements found by [`betti_elements`]. Membership in
/// the two-generator submonoids is decided by enumeration, independently of
/// the ∇-graph scan.
pub fn betti_via_cini(s: &NumericalMonoid) -> Result<Vec<i64>, CatenaryError> {
    let g = s.generators();
    if g.len() != 3 {
        return Err(CatenaryError::NotEmbeddingDimension3(g.len()));
    }
    let in_pair = |m: i64, a: i64, b: i64| (0..=m / a).any(|x| (m - x * a) % b == 0);
    let mut out = BTreeSet::new();
    for i in 0..3 {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        let c = (1..)
            .find(|&c| in_pair(c * g[i], g[j], g[k]))
            .expect("some multiple lies in the complementary submonoid");
        out.insert(c * g[i]);
    }
    Ok(out.into_iter().collect())
}

/// Betti elements `b` of the report with `b | n`.
pub fn dividing_betti(
    s: &NumericalMonoid,
    report: &BettiReport,
    n: i64,
) -> Result<Vec<i64>, CatenaryError> {
    if !s.contains(n) {
        return Err(CatenaryError::NotAnElement(n));
    }
    Ok(report
        .betti
        .iter()
        .map(|r| r.element)
        .filter(|&b| b <= n && s.contains(n - b))
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SandwichCheck {
    pub element: i64,
    /// Least catenary degree among dividing Betti elements.
    pub lower: Option<u64>,
    /// Greatest catenary degree among dividing Betti elements.
    pub upper: Option<u64>,
    pub catenary: u64,
    pub ok: bool,
}

/// `c(n)` for an element of a numerical monoid, through the spanning trees
/// of the elements `m` with `n - m ∈ S`. Agrees with [`catenary_degree`] on
/// `Z(n)` and stays fast when `Z(n)` is large.
pub fn catenary_degree_of(s: &NumericalMonoid, n: i64) -> Result<u64, CatenaryError> {
    if n < 0 {
        return Err(FactorizationError::NegativeElement(n).into());
    }
    if !s.contains(n) {
        return Err(CatenaryError::NotAnElement(n));
    }
    let mut catenary = 0;
    let needed = (0..=n).filter(|&m| s.contains(m) && s.contains(n - m));
    spanning::walk(s, needed, |m, layer| {
        if m == n {
            catenary = layer.catenary;
        }
    });
    Ok(catenary)
}

/// Checks `min c(b) ≤ c(n) ≤ max c(b)` over Betti elements `b | n`.
pub fn check_sandwich(
    s: &NumericalMonoid,
    report: &BettiReport,
    n: i64,
) -> Result<SandwichCheck, CatenaryError> {
    let catenary = catenary_degree_of(s, n)?;
    sandwich_with(s, report, n, catenary)
}

/// [`check_sandwich`] with `c(n)` already known.
pub fn sandwich_with(
    s: &NumericalMonoid,
    report: &BettiReport,
    n: i64,
    catenary: u64,
) -> Result<SandwichCheck, CatenaryError> {
    if catenary == 0 {
        return Err(CatenaryError::UniqueFactorization(n));
    }
    let dividing = dividing_betti(s, report, n)?;
    let degrees = dividing
        .iter()
        .filter_map(|&b| report.get(b).map(|r| r.catenary));
    let lower = degrees.clone().min();
    let upper = degrees.max();
    let ok = matches!((lower, upper), (Some(lo), Some(hi)) if lo <= catenary && catenary <= hi);
    Ok(SandwichCheck {
        element: n,
        lower,
        upper,
        catenary,
        ok,
    })
}

/// Catenary degrees of every element of `S ∩ [0, window]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatenaryScan {
    pub window: i64,
    pub per_element: BTreeMap<i64, u64>,
    pub factorization_counts: BTreeMap<i64, usize>,
    /// Values attained on the window; always contains 0.
    pub cset: Vec<u64>,
}

impl CatenaryScan {
    pub fn min_nonzero(&self) -> Option<u64> {
        self.cset.iter().copied().find(|&c| c > 0)
    }

    pub fn max(&self) -> u64 {
        self.cset.last().copied().unwrap_or(0)
    }
}

/// Catenary degrees of `S ∩ [0, window]`, built in increasing order so that
/// each spanning tree reuses those of `n - n_i`.
pub fn catenary_set_scan(s: &NumericalMonoid, window: i64) -> CatenaryScan {
    let mut rows: Vec<(i64, u64, usize)> = Vec::new();
    spanning::walk(
        s,
        (0..=window.max(0)).filter(|&n| s.contains(n)),
        |n, layer| rows.push((n, layer.catenary, layer.factorizations.len())),
    );
    let mut per_element = BTreeMap::new();
    let mut factorization_counts = BTreeMap::new();
    let mut cset = BTreeSet::from([0]);
    for (n, c, count) in rows {
        per_element.insert(n, c);
        factorization_counts.insert(n, count);
        cset.insert(c);
    }
    CatenaryScan {
        window,
        per_element,
        factorization_counts,
        cset: cset.into_iter().collect(),
    }
}
