//! Simple undirected graphs on at most [`MAX_VERTICES`] vertices, stored as
//! per-vertex neighbour masks.

use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};

use crate::error::{Error, Result};

/// Largest vertex count any [`Graph`] may have.
pub const MAX_VERTICES: usize = 32;

/// A subset of `0..MAX_VERTICES`, one bit per vertex.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_mask(mask: u64) -> Self {
        VertexSet(mask)
    }

    /// `{0, ..., n-1}`.
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub const fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub const fn mask(self) -> u64 {
        self.0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub const fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    pub const fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub const fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest member.
    pub const fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Largest member.
    pub const fn last(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(63 - self.0.leading_zeros() as usize)
        }
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<'a> FromIterator<&'a usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = &'a usize>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone, Debug)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

/// Complement within the full 64-bit universe; intersect with
/// [`VertexSet::full`] to stay inside a graph.
impl Not for VertexSet {
    type Output = VertexSet;
    fn not(self) -> VertexSet {
        VertexSet(!self.0)
    }
}

impl serde::Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// Immutable simple undirected graph on vertices `0..n`.
///
/// Row `v` of the adjacency is the neighbour mask of `v`; rows are symmetric,
/// loop-free and carry no bits at or above `n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

/// Where each vertex of a source graph ended up after a reduction.
/// `None` marks a deleted vertex.
pub type VertexMap = Vec<Option<usize>>;

impl Graph {
    /// The graph on zero vertices.
    pub fn null() -> Self {
        Graph { adj: Vec::new() }
    }

    pub fn edgeless(n: usize) -> Result<Self> {
        check_cap(n)?;
        Ok(Graph {
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        check_cap(n)?;
        let mut adj = vec![VertexSet::EMPTY; n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::malformed(format!(
                    "edge {{{u},{v}}} has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::malformed(format!("self-loop at vertex {u}")));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { adj })
    }

    /// Builds a graph from adjacency rows, validating symmetry, loops and range.
    pub fn from_rows(rows: Vec<VertexSet>) -> Result<Self> {
        let n = rows.len();
        check_cap(n)?;
        let universe = VertexSet::full(n);
        for (v, &row) in rows.iter().enumerate() {
            if !row.is_subset(universe) {
                return Err(Error::malformed(format!("row {v} has bits at or above {n}")));
            }
            if row.contains(v) {
                return Err(Error::malformed(format!("self-loop at vertex {v}")));
            }
            for u in row {
                if !rows[u].contains(v) {
                    return Err(Error::malformed(format!("asymmetric edge {v}->{u}")));
                }
            }
        }
        Ok(Graph { adj: rows })
    }

    /// Trusted constructor for code paths that maintain the invariants.
    pub(crate) fn from_rows_unchecked(rows: Vec<VertexSet>) -> Self {
        debug_assert!(Graph::from_rows(rows.clone()).is_ok());
        Graph { adj: rows }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn rows(&self) -> &[VertexSet] {
        &self.adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for v in self.adj[u] {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertices();
        let rows = (0..self.n())
            .map(|v| full - self.adj[v] - VertexSet::singleton(v))
            .collect();
        Graph::from_rows_unchecked(rows)
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| (s - self.adj[v]).without(v).is_empty())
    }

    /// Number of edges with both ends in `s`.
    pub fn edges_within(&self, s: VertexSet) -> usize {
        s.iter().map(|v| (self.adj[v] & s).len()).sum::<usize>() / 2
    }

    fn check_subset(&self, s: VertexSet) -> Result<()> {
        if s.is_subset(self.vertices()) {
            Ok(())
        } else {
            Err(Error::malformed(format!(
                "vertex set {s} is not within 0..{}",
                self.n()
            )))
        }
    }

    /// `G[s]` with vertices renumbered in ascending order, plus the old-to-new map.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<(Graph, VertexMap)> {
        self.check_subset(s)?;
        let mut map = vec![None; self.n()];
        for (new, old) in s.iter().enumerate() {
            map[old] = Some(new);
        }
        let rows = s
            .iter()
            .map(|old| {
                (self.adj[old] & s)
                    .iter()
                    .map(|u| map[u].expect("neighbour inside s"))
                    .collect()
            })
            .collect();
        Ok((Graph::from_rows_unchecked(rows), map))
    }

    /// Shorthand for [`Graph::induced_subgraph`] when the map is not needed.
    pub fn induced(&self, s: VertexSet) -> Result<Graph> {
        self.induced_subgraph(s).map(|(g, _)| g)
    }

    /// `G - s`.
    pub fn delete_vertices(&self, s: VertexSet) -> Result<(Graph, VertexMap)> {
        self.check_subset(s)?;
        self.induced_subgraph(self.vertices() - s)
    }

    /// Identifies each part into a single vertex.
    ///
    /// Every part must be a non-empty independent set and parts must be pairwise
    /// disjoint. A part's new vertex takes the slot of its smallest member; the
    /// surviving slots are then compacted in ascending order.
    pub fn merge_vertices(&self, parts: &[VertexSet]) -> Result<(Graph, VertexMap)> {
        let mut seen = VertexSet::EMPTY;
        for (i, &part) in parts.iter().enumerate() {
            self.check_subset(part)?;
            if part.is_empty() {
                return Err(Error::precondition(format!("part {i} is empty")));
            }
            if !part.is_disjoint(seen) {
                return Err(Error::precondition(format!(
                    "part {i} = {part} overlaps an earlier part"
                )));
            }
            if !self.is_independent(part) {
                return Err(Error::precondition(format!(
                    "part {i} = {part} contains adjacent vertices"
                )));
            }
            seen = seen | part;
        }

        // representative slot for every old vertex
        let mut rep: Vec<usize> = (0..self.n()).collect();
        let mut dropped = VertexSet::EMPTY;
        for &part in parts {
            let head = part.first().expect("non-empty part");
            for v in part {
                rep[v] = head;
            }
            dropped = dropped | part.without(head);
        }
        let survivors = self.vertices() - dropped;
        let mut slot = vec![usize::MAX; self.n()];
        for (new, old) in survivors.iter().enumerate() {
            slot[old] = new;
        }
        let map: VertexMap = (0..self.n()).map(|v| Some(slot[rep[v]])).collect();

        let mut rows = vec![VertexSet::EMPTY; survivors.len()];
        for (u, v) in self.edges() {
            let (a, b) = (map[u].unwrap(), map[v].unwrap());
            debug_assert_ne!(a, b);
            rows[a].insert(b);
            rows[b].insert(a);
        }
        Ok((Graph::from_rows_unchecked(rows), map))
    }

    /// Appends vertex `n` adjacent exactly to `nbrs`.
    pub fn add_vertex_with_neighborhood(&self, nbrs: VertexSet) -> Result<Graph> {
        self.check_subset(nbrs)?;
        let n = self.n();
        check_cap(n + 1)?;
        let mut rows = self.adj.clone();
        for v in nbrs {
            rows[v].insert(n);
        }
        rows.push(nbrs);
        Ok(Graph::from_rows_unchecked(rows))
    }

    /// Whether the graph is 2-colourable.
    pub fn is_bipartite(&self) -> bool {
        self.bipartition(self.vertices()).is_some()
    }

    /// A 2-colouring of `G[s]` as the set of vertices on side 0, if one exists.
    pub fn bipartition(&self, s: VertexSet) -> Option<VertexSet> {
        let mut side0 = VertexSet::EMPTY;
        let mut unseen = s;
        while let Some(root) = unseen.first() {
            let mut frontier = VertexSet::singleton(root);
            let mut parity = false;
            unseen = unseen - frontier;
            while !frontier.is_empty() {
                if !parity {
                    side0 = side0 | frontier;
                }
                let mut next = VertexSet::EMPTY;
                for v in frontier {
                    next = next | (self.adj[v] & s);
                }
                // an edge inside a BFS layer closes an odd cycle
                for v in frontier {
                    if !(self.adj[v] & frontier).is_empty() {
                        return None;
                    }
                }
                next = next & unseen;
                unseen = unseen - next;
                frontier = next;
                parity = !parity;
            }
        }
        Some(side0)
    }

    /// Vertices reachable from `v` inside `s`.
    pub fn component_of(&self, v: usize, s: VertexSet) -> VertexSet {
        let mut comp = VertexSet::singleton(v);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for u in frontier {
                next = next | self.adj[u];
            }
            frontier = next & (s - comp);
            comp = comp | frontier;
        }
        comp
    }

    /// Labelled isomorphism test by brute force over permutations; meant for
    /// small test graphs.
    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        crate::enumerate::canonical_form(self) == crate::enumerate::canonical_form(other)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

pub(crate) fn check_cap(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::cap("vertex count", n, MAX_VERTICES))
    } else {
        Ok(())
    }
}
