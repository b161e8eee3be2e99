//! Minimum spanning trees of factorization graphs, built element by element.
//!
//! Two factorizations of `n` that share atom `i` are `e_i` plus two
//! factorizations of `n - n_i` at the same distance, so those pairs are
//! covered by the tree already found for `n - n_i`. Two factorizations with
//! disjoint supports are at distance `max(|a|, |b|)`, and between two support
//! classes it is enough to join every member to the shortest member of the
//! other class. Neither reduction changes the components of the subgraph of
//! edges of weight at most `t`, for any `t`, so a minimum spanning tree of the
//! reduced edge list is one of the complete graph and has the same bottleneck.

use std::collections::BTreeMap;

use crate::factorization::Factorization;
use crate::monoid::NumericalMonoid;
use crate::union_find::UnionFind;

/// `Z(n)` in sorted order together with a minimum spanning tree of its
/// distance graph.
#[derive(Debug, Clone)]
pub(crate) struct Layer {
    pub(crate) factorizations: Vec<Factorization>,
    /// `(weight, i, j)` edges, `|Z(n)| - 1` of them.
    pub(crate) tree: Vec<(u64, u32, u32)>,
    pub(crate) catenary: u64,
}

/// Visits `layer(m)` for each `m` of `elements`, which must be increasing
/// elements of `s` closed under the lookups `m - n_i` that stay in `s`.
pub(crate) fn walk(
    s: &NumericalMonoid,
    elements: impl IntoIterator<Item = i64>,
    mut visit: impl FnMut(i64, &Layer),
) {
    let reach = s.largest_generator();
    let mut layers: BTreeMap<i64, Layer> = BTreeMap::new();
    for n in elements {
        let layer = next_layer(s, n, &layers);
        visit(n, &layer);
        layers.insert(n, layer);
        layers = layers.split_off(&(n - reach + 1));
    }
}

fn next_layer(s: &NumericalMonoid, n: i64, layers: &BTreeMap<i64, Layer>) -> Layer {
    let gens = s.generators();
    let k = gens.len();
    if n == 0 {
        return Layer {
            factorizations: vec![Factorization::zero(k)],
            tree: Vec::new(),
            catenary: 0,
        };
    }

    // every factorization of n is e_i plus one of n - n_i, possibly for several i
    let sources: Vec<(usize, &Layer)> = gens
        .iter()
        .enumerate()
        .filter_map(|(i, &g)| layers.get(&(n - g)).map(|prev| (i, prev)))
        .collect();
    let mut tagged: Vec<(Factorization, usize, u32)> = Vec::new();
    for (slot, &(i, prev)) in sources.iter().enumerate() {
        for (idx, f) in prev.factorizations.iter().enumerate() {
            let mut counts = f.counts().to_vec();
            counts[i] += 1;
            tagged.push((Factorization::new(counts), slot, idx as u32));
        }
    }
    tagged.sort_unstable();

    let mut position: Vec<Vec<u32>> = sources
        .iter()
        .map(|(_, prev)| vec![0; prev.factorizations.len()])
        .collect();
    let mut factorizations: Vec<Factorization> = Vec::new();
    for (f, slot, idx) in tagged {
        if factorizations.last() != Some(&f) {
            factorizations.push(f);
        }
        position[slot][idx as usize] = (factorizations.len() - 1) as u32;
    }

    let mut edges: Vec<(u64, u32, u32)> = Vec::new();
    for (slot, (_, prev)) in sources.iter().enumerate() {
        let map = &position[slot];
        edges.extend(
            prev.tree
                .iter()
                .map(|&(w, a, b)| (w, map[a as usize], map[b as usize])),
        );
    }
    edges.extend(disjoint_support_edges(&factorizations));

    let m = factorizations.len();
    let mut uf = UnionFind::new(m);
    let mut tree = Vec::with_capacity(m.saturating_sub(1));
    edges.sort_unstable();
    for (w, a, b) in edges {
        if uf.union(a as usize, b as usize) {
            tree.push((w, a, b));
            if uf.component_count() == 1 {
                break;
            }
        }
    }
    debug_assert_eq!(tree.len() + 1, m);
    let catenary = tree.last().map_or(0, |e| e.0);
    Layer {
        factorizations,
        tree,
        catenary,
    }
}

/// Edges between factorizations with disjoint supports, reduced to the
/// shortest member of each support class.
fn disjoint_support_edges(factorizations: &[Factorization]) -> Vec<(u64, u32, u32)> {
    struct Class {
        members: Vec<u32>,
        shortest: u32,
        shortest_length: u64,
    }
    let mut classes: BTreeMap<Vec<u64>, Class> = BTreeMap::new();
    for (idx, f) in factorizations.iter().enumerate() {
        let mut mask = vec![0u64; f.dimension().div_ceil(64)];
        for i in f.support() {
            mask[i / 64] |= 1 << (i % 64);
        }
        let length = f.length();
        let class = classes.entry(mask).or_insert(Class {
            members: Vec::new(),
            shortest: idx as u32,
            shortest_length: length,
        });
        class.members.push(idx as u32);
        if length < class.shortest_length {
            class.shortest = idx as u32;
            class.shortest_length = length;
        }
    }
    let classes: Vec<(Vec<u64>, Class)> = classes.into_iter().collect();
    let length = |idx: u32| factorizations[idx as usize].length();
    let mut edges = Vec::new();
    for (x, (mask_a, a)) in classes.iter().enumerate() {
        for (mask_b, b) in &classes[x + 1..] {
            if mask_a.iter().zip(mask_b).any(|(p, q)| p & q != 0) {
                continue;
            }
            for &u in &a.members {
                edges.push((length(u).max(b.shortest_length), u, b.shortest));
            }
            for &v in &b.members {
                edges.push((length(v).max(a.shortest_length), a.shortest, v));
            }
        }
    }
    edges
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catenary::catenary_degree;
    use crate::factorization::factorizations;

    #[test]
    fn matches_complete_graph() {
        // the complete-graph reference is quadratic in |Z(n)|, so the
        // five-generator case stops earlier
        for (gens, bound) in [
            (&[11, 36, 39][..], 160),
            (&[11, 25, 29], 160),
            (&[5, 6, 7, 8, 9], 80),
            (&[6, 10, 15], 160),
            (&[7, 9, 11, 19], 160),
            (&[2, 3], 160),
        ] {
            let s = NumericalMonoid::new(gens).unwrap();
            let mut checked = 0;
            walk(&s, (0..=bound).filter(|&n| s.contains(n)), |n, layer| {
                let z = factorizations(&s, n).unwrap();
                assert_eq!(layer.factorizations, z.factorizations(), "{gens:?} at {n}");
                assert_eq!(
                    layer.catenary,
                    catenary_degree(&z).unwrap(),
                    "{gens:?} at {n}"
                );
                assert_eq!(layer.tree.len() + 1, z.len());
                checked += 1;
            });
            assert!(checked > 0);
        }
    }
}
