//! Named graph families: cycles, paths, cliques, complete bipartite graphs,
//! the hexagon-plus-triangle gadget, and (generalised) Mycielski graphs.

use crate::error::{Error, Result};
use crate::graph::{check_cap, Graph, VertexSet, MAX_VERTICES};

/// Cycle `0-1-...-(n-1)-0`, `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::malformed(format!("a cycle needs at least 3 vertices, got {n}")));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

/// Path `0-1-...-(n-1)`, `n >= 1`.
pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::malformed("a path needs at least one vertex"));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

/// `K_n`, `n >= 1`.
pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::malformed("a complete graph needs at least one vertex"));
    }
    check_cap(n)?;
    let full = VertexSet::full(n);
    Ok(Graph::from_rows_unchecked(
        (0..n).map(|v| full.without(v)).collect(),
    ))
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(Error::malformed("both sides of K_{a,b} must be non-empty"));
    }
    let edges: Vec<_> = (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))).collect();
    Graph::from_edges(a + b, &edges)
}

/// `n` isolated vertices, `n >= 1`.
pub fn edgeless(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::malformed("an edgeless graph here needs at least one vertex"));
    }
    Graph::edgeless(n)
}

/// Families accepted by [`basic_graph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Cycle(usize),
    Path(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Edgeless(usize),
}

pub fn basic_graph(family: Family) -> Result<Graph> {
    match family {
        Family::Cycle(n) => cycle(n),
        Family::Path(n) => path(n),
        Family::Complete(n) => complete(n),
        Family::CompleteBipartite(a, b) => complete_bipartite(a, b),
        Family::Edgeless(n) => edgeless(n),
    }
}

/// The 6-cycle `v1..v6` (vertices `0..6`) plus the triangle `v1 v3 v5`.
///
/// Every induced subgraph loses half-stability after deleting one vertex, yet
/// no single vertex deletion makes it bipartite.
pub fn fig1_gadget() -> Graph {
    Graph::from_edges(
        6,
        &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 2), (2, 4), (4, 0)],
    )
    .expect("static gadget")
}

/// Mycielski construction on `2n + 1` vertices: originals `0..n` keep their
/// edges, shadow `n + i` is adjacent to the neighbours of `i`, and the apex
/// `2n` is adjacent to every shadow.
pub fn mycielski(g: &Graph) -> Result<Graph> {
    let n = g.n();
    if n == 0 {
        return Err(Error::precondition("Mycielski construction needs at least one vertex"));
    }
    let size = 2 * n + 1;
    if size > MAX_VERTICES {
        return Err(Error::cap("Mycielski graph vertex count", size, MAX_VERTICES));
    }
    let shift = |s: VertexSet| VertexSet::from_mask(s.mask() << n);
    let apex = 2 * n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        rows.push(g.neighbors(i) | shift(g.neighbors(i)));
    }
    for i in 0..n {
        rows.push(g.neighbors(i).with(apex));
    }
    rows.push(shift(VertexSet::full(n)));
    Ok(Graph::from_rows_unchecked(rows))
}

/// `|V(M'_{k,l})| = (l + 1) * 2^(k-1) - 1`, or `None` on overflow.
pub fn generalized_mycielski_order(k: u32, ell: u64) -> Option<u64> {
    let pow = 1u64.checked_shl(k.checked_sub(1)?)?;
    (ell.checked_add(1)?).checked_mul(pow)?.checked_sub(1)
}

/// `M'_{k,l}`: the Mycielski construction applied `k - 2` times to `C_{2l+1}`.
pub fn generalized_mycielski(k: usize, ell: usize) -> Result<Graph> {
    if k < 2 || ell < 2 {
        return Err(Error::malformed(format!(
            "generalised Mycielski needs k >= 2 and l >= 2, got k = {k}, l = {ell}"
        )));
    }
    let size = u32::try_from(k)
        .ok()
        .and_then(|k| generalized_mycielski_order(k, ell as u64))
        .unwrap_or(u64::MAX);
    if size > MAX_VERTICES as u64 {
        return Err(Error::cap(
            "generalised Mycielski vertex count",
            usize::try_from(size).unwrap_or(usize::MAX),
            MAX_VERTICES,
        ));
    }
    let mut g = cycle(2 * ell + 1)?;
    for _ in 2..k {
        g = mycielski(&g)?;
    }
    Ok(g)
}

/// `M_k` with `M_2 = C_5`; `|V(M_k)| = 3 * 2^(k-1) - 1`.
pub fn mycielski_iterated(k: usize) -> Result<Graph> {
    generalized_mycielski(k, 2)
}
