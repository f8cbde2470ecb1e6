//! Exhaustive small-graph corpora and a brute-force canonical form.
//!
//! The canonical representative of an isomorphism class is the relabelling
//! whose upper-triangle adjacency string, read column by column
//! (`x(0,1), x(0,2), x(1,2), x(0,3), ...`, the graph6 bit order), is
//! lexicographically smallest.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest `n` for isomorphism-class enumeration.
pub const DEDUP_CAP: usize = 8;
/// Largest `n` for labelled enumeration (`2^21` graphs at the cap).
pub const LABELED_CAP: usize = 7;
/// Largest `n` accepted by [`canonical_form`]; the key must fit 128 bits.
pub const CANON_CAP: usize = 16;

/// Column-major upper-triangle code of `g` under the labelling `perm`
/// (`perm[position] = original vertex`). The first bit is most significant.
fn code_under(g: &Graph, perm: &[usize]) -> u128 {
    let mut key = 0u128;
    for j in 1..perm.len() {
        key = (key << j) | column(g, perm, j) as u128;
    }
    key
}

#[inline]
fn column(g: &Graph, perm: &[usize], j: usize) -> u64 {
    let row = g.neighbors(perm[j]);
    let mut col = 0u64;
    for &u in &perm[..j] {
        col = (col << 1) | row.contains(u) as u64;
    }
    col
}

struct CanonSearch<'a> {
    g: &'a Graph,
    perm: Vec<usize>,
    cols: Vec<u64>,
    best_perm: Vec<usize>,
    best_cols: Vec<u64>,
}

impl CanonSearch<'_> {
    /// Returns whether the best labelling was replaced somewhere below.
    fn dfs(&mut self, depth: usize, used: VertexSet, state: Ordering) -> bool {
        let n = self.g.n();
        if depth == n {
            if state == Ordering::Less {
                self.best_perm.copy_from_slice(&self.perm);
                self.best_cols.copy_from_slice(&self.cols);
                return true;
            }
            return false;
        }
        let mut state = state;
        let mut updated = false;
        for v in self.g.vertices() - used {
            self.perm[depth] = v;
            let col = column(self.g, &self.perm, depth);
            self.cols[depth] = col;
            let child_state = match state {
                Ordering::Equal => col.cmp(&self.best_cols[depth]),
                other => other,
            };
            if child_state == Ordering::Greater {
                continue;
            }
            if self.dfs(depth + 1, used.with(v), child_state) {
                updated = true;
                // the new best shares this prefix
                state = Ordering::Equal;
            }
        }
        updated
    }
}

/// Canonical relabelling of `g` together with the permutation used
/// (`perm[new] = old`).
pub fn canonical_labeling(g: &Graph) -> Result<(Graph, Vec<usize>)> {
    let n = g.n();
    if n > CANON_CAP {
        return Err(Error::cap("canonical form", n, CANON_CAP));
    }
    let identity: Vec<usize> = (0..n).collect();
    let best_cols: Vec<u64> = (0..n).map(|j| column(g, &identity, j)).collect();
    let mut search = CanonSearch {
        g,
        perm: vec![0; n],
        cols: vec![0; n],
        best_perm: identity,
        best_cols,
    };
    search.dfs(0, VertexSet::EMPTY, Ordering::Equal);
    let perm = search.best_perm;
    let mut inverse = vec![0; n];
    for (new, &old) in perm.iter().enumerate() {
        inverse[old] = new;
    }
    let rows = perm
        .iter()
        .map(|&old| g.neighbors(old).iter().map(|u| inverse[u]).collect())
        .collect();
    Ok((Graph::from_rows_unchecked(rows), perm))
}

/// Canonical representative of the isomorphism class of `g`.
///
/// # Panics
/// If `g` has more than [`CANON_CAP`] vertices.
pub fn canonical_form(g: &Graph) -> Graph {
    canonical_labeling(g).expect("graph within canonical-form cap").0
}

/// Column-major code of `g` in its own labelling.
pub fn adjacency_code(g: &Graph) -> u128 {
    let identity: Vec<usize> = (0..g.n()).collect();
    code_under(g, &identity)
}

/// The `k`-th vertex pair in column-major order.
fn pair_of_bit(k: usize) -> (usize, usize) {
    let mut j = 1;
    let mut start = 0;
    while start + j <= k {
        start += j;
        j += 1;
    }
    (k - start, j)
}

fn labeled_graph(n: usize, mask: u64) -> Graph {
    let mut rows = vec![VertexSet::EMPTY; n];
    let mut m = mask;
    while m != 0 {
        let k = m.trailing_zeros() as usize;
        m &= m - 1;
        let (i, j) = pair_of_bit(k);
        rows[i].insert(j);
        rows[j].insert(i);
    }
    Graph::from_rows_unchecked(rows)
}

/// Stream of graphs produced by [`enumerate_graphs`].
#[derive(Debug)]
pub enum GraphEnumeration {
    Labeled { n: usize, next: u64, end: u64 },
    Classes(std::vec::IntoIter<Graph>),
}

impl Iterator for GraphEnumeration {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        match self {
            GraphEnumeration::Labeled { n, next, end } => {
                if *next >= *end {
                    return None;
                }
                let g = labeled_graph(*n, *next);
                *next += 1;
                Some(g)
            }
            GraphEnumeration::Classes(it) => it.next(),
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        match self {
            GraphEnumeration::Labeled { next, end, .. } => {
                let left = (end - next) as usize;
                (left, Some(left))
            }
            GraphEnumeration::Classes(it) => it.size_hint(),
        }
    }
}

impl ExactSizeIterator for GraphEnumeration {}

/// All graphs on exactly `n` vertices.
///
/// With `dedup = false` every labelled graph is produced, ordered by its
/// column-major adjacency code read as a little-endian integer. With
/// `dedup = true` one canonical representative per isomorphism class is
/// produced, in increasing canonical-code order.
pub fn enumerate_graphs(n: usize, dedup: bool) -> Result<GraphEnumeration> {
    if dedup {
        if n > DEDUP_CAP {
            return Err(Error::cap("isomorphism-class enumeration", n, DEDUP_CAP));
        }
        Ok(GraphEnumeration::Classes(isomorphism_classes(n).into_iter()))
    } else {
        if n > LABELED_CAP {
            return Err(Error::cap("labelled enumeration", n, LABELED_CAP));
        }
        let bits = n * n.saturating_sub(1) / 2;
        Ok(GraphEnumeration::Labeled {
            n,
            next: 0,
            end: 1u64 << bits,
        })
    }
}

/// All graphs on `0..=n_max` vertices, concatenated by vertex count.
pub fn enumerate_up_to(n_max: usize, dedup: bool) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 0..=n_max {
        out.extend(enumerate_graphs(n, dedup)?);
    }
    Ok(out)
}

/// Canonical class representatives on `n` vertices, grown one vertex at a time:
/// every graph on `n` vertices is a representative on `n - 1` vertices plus a
/// vertex with some neighbourhood.
fn isomorphism_classes(n: usize) -> Vec<Graph> {
    let mut layer = vec![Graph::null()];
    for size in 1..=n {
        let mut next: BTreeMap<u128, Graph> = BTreeMap::new();
        for base in &layer {
            for mask in 0..(1u64 << (size - 1)) {
                let g = base
                    .add_vertex_with_neighborhood(VertexSet::from_mask(mask))
                    .expect("within cap");
                let canon = canonical_form(&g);
                next.entry(adjacency_code(&canon)).or_insert(canon);
            }
        }
        layer = next.into_values().collect();
    }
    layer
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in all_perms(n - 1) {
            for pos in 0..n {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    /// Unpruned minimisation over all permutations.
    fn naive_canonical_code(g: &Graph) -> u128 {
        all_perms(g.n())
            .iter()
            .map(|p| code_under(g, p))
            .min()
            .unwrap()
    }

    #[test]
    fn pair_order_is_column_major() {
        let pairs: Vec<_> = (0..6).map(pair_of_bit).collect();
        assert_eq!(pairs, vec![(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]);
    }

    #[test]
    fn labeled_counts() {
        assert_eq!(enumerate_graphs(3, false).unwrap().count(), 8);
        assert_eq!(enumerate_graphs(0, false).unwrap().count(), 1);
        assert_eq!(enumerate_graphs(1, false).unwrap().count(), 1);
        assert!(enumerate_graphs(8, false).is_err());
    }

    #[test]
    fn class_counts_small() {
        let counts: Vec<usize> = (0..=6)
            .map(|n| enumerate_graphs(n, true).unwrap().count())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
        assert!(enumerate_graphs(9, true).is_err());
    }

    #[test]
    fn pruned_search_matches_naive_on_all_labeled_5_vertex_graphs() {
        for g in enumerate_graphs(5, false).unwrap() {
            let (canon, perm) = canonical_labeling(&g).unwrap();
            assert_eq!(adjacency_code(&canon), naive_canonical_code(&g), "{g:?}");
            assert_eq!(code_under(&g, &perm), adjacency_code(&canon));
        }
    }

    #[test]
    fn brute_force_dedup_of_4_vertex_graphs_gives_11() {
        let mut codes: Vec<u128> = enumerate_graphs(4, false)
            .unwrap()
            .map(|g| naive_canonical_code(&g))
            .collect();
        codes.sort();
        codes.dedup();
        assert_eq!(codes.len(), 11);
        let classes: Vec<u128> = enumerate_graphs(4, true)
            .unwrap()
            .map(|g| adjacency_code(&g))
            .collect();
        assert_eq!(classes, codes);
    }

    #[test]
    fn canonical_form_is_a_class_invariant() {
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let pentagram = Graph::from_edges(5, &[(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert!(c5.is_isomorphic(&pentagram));
        let p5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert!(!c5.is_isomorphic(&p5));
    }
}
