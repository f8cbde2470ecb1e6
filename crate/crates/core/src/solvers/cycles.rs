use std::collections::VecDeque;
use std::ops::ControlFlow;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest `n` for induced-cycle enumeration.
pub const INDUCED_CYCLE_CAP: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShortestCycle {
    /// Cycle vertices in traversal order.
    pub vertices: Vec<usize>,
    pub girth: usize,
}

/// A shortest cycle, found by breadth-first search from every vertex.
pub fn shortest_cycle(g: &Graph) -> Option<ShortestCycle> {
    let n = g.n();
    let mut best: Option<Vec<usize>> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let path_from_root = |parent: &[usize], mut x: usize| {
        let mut p = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            p.push(x);
        }
        p.reverse();
        p
    };
    for root in 0..n {
        dist.fill(usize::MAX);
        parent.fill(usize::MAX);
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let bound = best.as_ref().map_or(usize::MAX, Vec::len);
            if 2 * dist[u] >= bound {
                break;
            }
            for w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if w != parent[u] {
                    let len = dist[u] + dist[w] + 1;
                    if len >= best.as_ref().map_or(usize::MAX, Vec::len) {
                        continue;
                    }
                    let pu = path_from_root(&parent, u);
                    let pw = path_from_root(&parent, w);
                    let su: VertexSet = pu.iter().collect();
                    let sw: VertexSet = pw.iter().collect();
                    if su & sw != VertexSet::singleton(root) {
                        continue;
                    }
                    let mut cycle = pu;
                    cycle.extend(pw.into_iter().skip(1).rev());
                    best = Some(cycle);
                }
            }
        }
    }
    best.map(|vertices| ShortestCycle {
        girth: vertices.len(),
        vertices,
    })
}

/// Whether `cycle` lists the vertices of a chordless cycle (length >= 3) in
/// traversal order.
pub fn is_induced_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let len = cycle.len();
    if len < 3 || cycle.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let set: VertexSet = cycle.iter().collect();
    if set.len() != len {
        return false;
    }
    (0..len).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % len])) && g.edges_within(set) == len
}

/// Whether `cycle` lists the vertices of a (not necessarily induced) cycle.
pub fn is_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let len = cycle.len();
    len >= 3
        && cycle.iter().all(|&v| v < g.n())
        && cycle.iter().collect::<VertexSet>().len() == len
        && (0..len).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % len]))
}

/// Traversal order of a vertex set inducing a cycle: from its smallest vertex
/// towards the smaller of that vertex's two cycle neighbours.
pub fn cycle_order(g: &Graph, set: VertexSet) -> Vec<usize> {
    let start = set.first().expect("non-empty cycle");
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = (g.neighbors(start) & set).first().expect("cycle vertex has neighbours");
    while cur != start {
        order.push(cur);
        let next = (g.neighbors(cur) & set).without(prev).first().expect("2-regular");
        prev = cur;
        cur = next;
    }
    order
}

/// Visits every vertex set of size `k` inducing a cycle, in lexicographic
/// order of the sorted vertex lists.
fn for_each_induced_cycle<B>(
    g: &Graph,
    k: usize,
    visit: &mut impl FnMut(VertexSet) -> ControlFlow<B>,
) -> ControlFlow<B> {
    fn grow<B>(
        g: &Graph,
        k: usize,
        from: usize,
        chosen: VertexSet,
        visit: &mut impl FnMut(VertexSet) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        if chosen.len() == k {
            let two_regular = chosen.iter().all(|v| (g.neighbors(v) & chosen).len() == 2);
            if two_regular && g.component_of(chosen.first().unwrap(), chosen) == chosen {
                return visit(chosen);
            }
            return ControlFlow::Continue(());
        }
        let need = k - chosen.len();
        for v in from..g.n() {
            if g.n() - v < need {
                break;
            }
            let next = chosen.with(v);
            let inner = g.neighbors(v) & chosen;
            if inner.len() > 2 || inner.iter().any(|u| (g.neighbors(u) & next).len() > 2) {
                continue;
            }
            // a closed cycle inside a too-small set can never grow
            if next.len() < k {
                let comp = g.component_of(v, next);
                if comp.iter().all(|u| (g.neighbors(u) & next).len() == 2) {
                    continue;
                }
            }
            grow(g, k, v + 1, next, visit)?;
        }
        ControlFlow::Continue(())
    }
    grow(g, k, 0, VertexSet::EMPTY, visit)
}

fn check_cycle_cap(g: &Graph) -> Result<()> {
    if g.n() > INDUCED_CYCLE_CAP {
        Err(Error::cap("induced cycle enumeration", g.n(), INDUCED_CYCLE_CAP))
    } else {
        Ok(())
    }
}

/// An induced even cycle of length at least four: shortest first, then the
/// lexicographically least vertex set, returned in [`cycle_order`].
pub fn find_induced_even_cycle(g: &Graph) -> Result<Option<Vec<usize>>> {
    check_cycle_cap(g)?;
    for k in (4..=g.n()).step_by(2) {
        if let ControlFlow::Break(set) = for_each_induced_cycle(g, k, &mut ControlFlow::Break) {
            return Ok(Some(cycle_order(g, set)));
        }
    }
    Ok(None)
}

/// All induced even cycles (length at least four), shortest first.
pub fn induced_even_cycles(g: &Graph) -> Result<Vec<Vec<usize>>> {
    check_cycle_cap(g)?;
    let mut out = Vec::new();
    for k in (4..=g.n()).step_by(2) {
        let _ = for_each_induced_cycle::<()>(g, k, &mut |set| {
            out.push(cycle_order(g, set));
            ControlFlow::Continue(())
        });
    }
    Ok(out)
}

/// Edges `xy`, `xu`, `xv`, `yu`, `yv`. The 4-set induces a diamond exactly
/// when `uv` is a non-edge, recorded in `induced`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Diamond {
    pub x: usize,
    pub y: usize,
    pub u: usize,
    pub v: usize,
    pub induced: bool,
}

/// Every `(x, y, u, v)` with `xy` an edge and `u`, `v` non-adjacent common
/// neighbours of `x` and `y`, normalised to `x < y` and `u < v`.
pub fn diamond_configurations(g: &Graph) -> Vec<Diamond> {
    let mut out = Vec::new();
    for (x, y) in g.edges() {
        let common = g.neighbors(x) & g.neighbors(y);
        for u in common {
            for v in common - g.neighbors(u) {
                if v > u {
                    out.push(Diamond { x, y, u, v, induced: true });
                }
            }
        }
    }
    out
}

/// A diamond, preferring an induced one; otherwise a non-induced copy (all
/// six edges present) is reported with `induced = false`.
pub fn find_diamond(g: &Graph) -> Option<Diamond> {
    if let Some(d) = diamond_configurations(g).into_iter().next() {
        return Some(d);
    }
    for (x, y) in g.edges() {
        let common = g.neighbors(x) & g.neighbors(y);
        let mut it = common.iter();
        if let (Some(u), Some(v)) = (it.next(), it.next()) {
            return Some(Diamond { x, y, u, v, induced: false });
        }
    }
    None
}
