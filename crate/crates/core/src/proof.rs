//! The reductions, colouring extensions and auxiliary lemmas behind the
//! Folkman bound, as checked operations on concrete graphs.
//!
//! Every operation validates the structural hypotheses it relies on and
//! refuses inputs outside them.

use serde::Serialize;

use crate::budget::SolverBudget;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexMap, VertexSet};
use crate::invariants::{folkman_number, potential_of, PotentialWitness};
use crate::solvers::{
    all_maximum_independent_sets, chromatic_numbers_all_subsets, diamond_configurations, find_induced_even_cycle,
    independence_number_within, induced_even_cycles, is_cycle, is_induced_cycle, shortest_cycle,
    ColoringCertificate, ALL_MIS_CAP,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReductionKind {
    EvenCycleContraction,
    DiamondReduction,
    ApexReplacement,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum ReductionParams {
    Cycle { cycle: Vec<usize> },
    Diamond { x: usize, y: usize, u: usize, v: usize },
    Apex { x: usize, y: usize, common: VertexSet },
}

/// What a reduction did, in source-graph terms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionTrace {
    pub kind: ReductionKind,
    /// Source vertices deleted outright.
    pub removed: VertexSet,
    /// Independent source sets identified into one vertex each.
    pub merged: Vec<VertexSet>,
    /// Old index to new index; `None` exactly on `removed`.
    pub map: VertexMap,
    /// New-graph indices of the vertices the reduction created: `a, b` for a
    /// contraction, `w` for a diamond reduction, `z` for an apex.
    pub created: Vec<usize>,
    pub params: ReductionParams,
}

fn check_vertex(g: &Graph, v: usize) -> Result<()> {
    if v < g.n() {
        Ok(())
    } else {
        Err(Error::malformed(format!("vertex {v} out of range 0..{}", g.n())))
    }
}

/// Merges the two alternating classes of an induced even cycle.
pub fn even_cycle_contraction(g: &Graph, cycle: &[usize]) -> Result<(Graph, ReductionTrace)> {
    if cycle.len() < 4 || !cycle.len().is_multiple_of(2) {
        return Err(Error::precondition(format!(
            "contraction needs an even cycle of length at least 4, got length {}",
            cycle.len()
        )));
    }
    if !is_induced_cycle(g, cycle) {
        return Err(Error::precondition(format!("{cycle:?} is not an induced cycle")));
    }
    let a: VertexSet = cycle.iter().step_by(2).collect();
    let b: VertexSet = cycle.iter().skip(1).step_by(2).collect();
    let (h, map) = g.merge_vertices(&[a, b])?;
    let created = vec![map[cycle[0]].unwrap(), map[cycle[1]].unwrap()];
    Ok((
        h,
        ReductionTrace {
            kind: ReductionKind::EvenCycleContraction,
            removed: VertexSet::EMPTY,
            merged: vec![a, b],
            map,
            created,
            params: ReductionParams::Cycle {
                cycle: cycle.to_vec(),
            },
        },
    ))
}

fn compose(first: &VertexMap, second: &VertexMap) -> VertexMap {
    first.iter().map(|m| m.and_then(|i| second[i])).collect()
}

/// `G_uv`: delete `x, y`, then identify `u` and `v` into `w`.
pub fn diamond_reduction(
    g: &Graph,
    x: usize,
    y: usize,
    u: usize,
    v: usize,
) -> Result<(Graph, ReductionTrace)> {
    for w in [x, y, u, v] {
        check_vertex(g, w)?;
    }
    if [x, y, u, v].iter().collect::<VertexSet>().len() != 4 {
        return Err(Error::precondition("x, y, u, v must be distinct"));
    }
    if !g.has_edge(x, y) {
        return Err(Error::precondition(format!("{x}{y} is not an edge")));
    }
    let common = g.neighbors(x) & g.neighbors(y);
    if !common.contains(u) || !common.contains(v) {
        return Err(Error::precondition(format!(
            "{u} and {v} must both be common neighbours of {x} and {y}"
        )));
    }
    if g.has_edge(u, v) {
        return Err(Error::precondition(format!("{u}{v} is an edge")));
    }
    let removed: VertexSet = [x, y].iter().collect();
    let (h, first) = g.delete_vertices(removed)?;
    let part: VertexSet = [first[u].unwrap(), first[v].unwrap()].iter().collect();
    let (h, second) = h.merge_vertices(&[part])?;
    let map = compose(&first, &second);
    let created = vec![map[u].unwrap()];
    Ok((
        h,
        ReductionTrace {
            kind: ReductionKind::DiamondReduction,
            removed,
            merged: vec![[u, v].iter().collect()],
            map,
            created,
            params: ReductionParams::Diamond { x, y, u, v },
        },
    ))
}

/// `G'`: delete `x, y` and add `z` adjacent to their common neighbourhood.
pub fn apex_replacement(g: &Graph, x: usize, y: usize) -> Result<(Graph, ReductionTrace)> {
    check_vertex(g, x)?;
    check_vertex(g, y)?;
    if !g.has_edge(x, y) {
        return Err(Error::precondition(format!("{x}{y} is not an edge")));
    }
    let common = g.neighbors(x) & g.neighbors(y);
    let removed: VertexSet = [x, y].iter().collect();
    let (h, map) = g.delete_vertices(removed)?;
    let image: VertexSet = common.iter().map(|a| map[a].unwrap()).collect();
    let z = h.n();
    let h = h.add_vertex_with_neighborhood(image)?;
    Ok((
        h,
        ReductionTrace {
            kind: ReductionKind::ApexReplacement,
            removed,
            merged: Vec::new(),
            map,
            created: vec![z],
            params: ReductionParams::Apex { x, y, common },
        },
    ))
}

/// Pulls a colouring of a reduced graph back to the source: surviving and
/// merged vertices keep their image's colour, removed vertices get fresh
/// colours `k+1, k+2, ...` in index order.
///
/// The result is proper whenever `phi` is proper on the reduced graph.
pub fn lift_coloring(
    source: &Graph,
    trace: &ReductionTrace,
    phi: &ColoringCertificate,
) -> Result<ColoringCertificate> {
    if trace.map.len() != source.n() {
        return Err(Error::precondition("trace does not belong to this graph"));
    }
    let mut fresh = phi.k();
    let colors = trace
        .map
        .iter()
        .map(|m| match m {
            Some(i) => phi.colors().get(*i).copied().ok_or_else(|| {
                Error::precondition("colouring is shorter than the reduced graph")
            }),
            None => {
                fresh += 1;
                Ok(fresh)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    ColoringCertificate::new(colors)
}

/// Neighbourhoods outside `core`, one per listed vertex; checks the shared
/// hypothesis that they are pairwise disjoint and pairwise non-adjacent.
fn outside_neighborhoods(g: &Graph, order: &[usize], core: VertexSet) -> Result<Vec<VertexSet>> {
    let parts: Vec<VertexSet> = order.iter().map(|&v| g.neighbors(v) - core).collect();
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            if !parts[i].is_disjoint(parts[j]) {
                return Err(Error::precondition(format!(
                    "neighbourhoods of {} and {} overlap in {}",
                    order[i],
                    order[j],
                    parts[i] & parts[j]
                )));
            }
            if let Some(w) = parts[i].iter().find(|&w| !g.neighbors(w).is_disjoint(parts[j])) {
                return Err(Error::precondition(format!(
                    "neighbourhoods of {} and {} are joined by an edge at {w}",
                    order[i], order[j]
                )));
            }
        }
    }
    Ok(parts)
}

/// Validates `phi` against `G - core` and spreads it over the source indices
/// (0 on `core`).
fn base_colors(g: &Graph, core: VertexSet, phi: &ColoringCertificate) -> Result<Vec<u32>> {
    let (rest, map) = g.delete_vertices(core)?;
    if phi.len() != rest.n() {
        return Err(Error::precondition(format!(
            "colouring has {} entries but the remaining graph has {} vertices",
            phi.len(),
            rest.n()
        )));
    }
    if !phi.is_proper(&rest) {
        return Err(Error::precondition("colouring of the remaining graph is not proper"));
    }
    Ok(map.iter().map(|m| m.map_or(0, |i| phi.color(i))).collect())
}

fn finish(g: &Graph, colors: Vec<u32>) -> Result<ColoringCertificate> {
    let cert = ColoringCertificate::new(colors)?;
    if !cert.is_proper(g) {
        return Err(Error::CrossCheck("extended colouring is not proper".into()));
    }
    Ok(cert)
}

/// Extends a colouring of `G - K` over the clique `K = [u_1, ..., u_w]`:
/// `u_i` gets colour `i` and every neighbour of `u_i` that already had colour
/// `i` moves to the fresh colour `c = phi.k() + 1`.
pub fn extend_coloring_over_clique(
    g: &Graph,
    clique: &[usize],
    phi: &ColoringCertificate,
) -> Result<ColoringCertificate> {
    for &v in clique {
        check_vertex(g, v)?;
    }
    let k: VertexSet = clique.iter().collect();
    if clique.is_empty() || k.len() != clique.len() {
        return Err(Error::precondition("clique must be a non-empty list of distinct vertices"));
    }
    if !g.is_clique(k) {
        return Err(Error::precondition(format!("{k} is not a clique")));
    }
    let parts = outside_neighborhoods(g, clique, k)?;
    let mut colors = base_colors(g, k, phi)?;
    let c = phi.k() + 1;
    for (i, (&u, &nbrs)) in clique.iter().zip(&parts).enumerate() {
        let own = i as u32 + 1;
        colors[u] = own;
        for w in nbrs {
            if colors[w] == own {
                colors[w] = c;
            }
        }
    }
    finish(g, colors)
}

/// Extends a colouring of `G - C` over a shortest cycle `C = [v_1, ...,
/// v_{2p+1}]`: colours alternate 2, 1, 2, 1, ... from `v_1`, `v_{2p+1}` gets 3,
/// and outside neighbours clashing with their cycle vertex move to
/// `c = phi.k() + 1`.
pub fn extend_coloring_over_odd_cycle(
    g: &Graph,
    cycle: &[usize],
    phi: &ColoringCertificate,
) -> Result<ColoringCertificate> {
    for &v in cycle {
        check_vertex(g, v)?;
    }
    if !is_cycle(g, cycle) {
        return Err(Error::precondition(format!("{cycle:?} is not a cycle")));
    }
    let len = cycle.len();
    if len.is_multiple_of(2) || len < 5 {
        return Err(Error::precondition(format!(
            "cycle must be odd of length at least 5, got {len}"
        )));
    }
    let on_cycle: VertexSet = cycle.iter().collect();
    if let Some(w) = (g.vertices() - on_cycle)
        .iter()
        .find(|&w| (g.neighbors(w) & on_cycle).len() > 1)
    {
        return Err(Error::precondition(format!(
            "vertex {w} has {} neighbours on the cycle",
            (g.neighbors(w) & on_cycle).len()
        )));
    }
    let girth = shortest_cycle(g).map_or(usize::MAX, |s| s.girth);
    if girth != len {
        return Err(Error::precondition(format!(
            "cycle of length {len} is not shortest; the girth is {girth}"
        )));
    }
    let parts = outside_neighborhoods(g, cycle, on_cycle)?;
    let mut colors = base_colors(g, on_cycle, phi)?;
    let c = phi.k() + 1;
    for (i, (&v, &nbrs)) in cycle.iter().zip(&parts).enumerate() {
        // positions are 1-based in the usual statement: v_{2i} -> 1, v_{2i-1} -> 2
        let own = if i == len - 1 {
            3
        } else if i % 2 == 1 {
            1
        } else {
            2
        };
        colors[v] = own;
        for w in nbrs {
            if colors[w] == own {
                colors[w] = c;
            }
        }
    }
    finish(g, colors)
}

fn alpha_within(g: &Graph, s: VertexSet) -> usize {
    independence_number_within(g, s, SolverBudget::unlimited())
        .expect("unlimited budget")
        .0
}

/// Follows the edge-deletion induction on `G[alive]`: take an isolated vertex
/// if there is one, pass to a component that still has a large independent
/// set, otherwise drop an edge that keeps the independence number.
fn hajnal_descend(mut g: Graph, mut alive: VertexSet) -> Option<usize> {
    loop {
        if let Some(v) = alive.iter().find(|&v| g.neighbors(v).is_disjoint(alive)) {
            return Some(v);
        }
        let first = alive.first()?;
        let comp = g.component_of(first, alive);
        if comp != alive {
            let mut rest = alive;
            let mut chosen = None;
            while let Some(v) = rest.first() {
                let c = g.component_of(v, rest);
                if 2 * alpha_within(&g, c) > c.len() {
                    chosen = Some(c);
                    break;
                }
                rest = rest - c;
            }
            alive = chosen?;
            continue;
        }
        let alpha = alpha_within(&g, alive);
        let mut next = None;
        'edges: for u in alive {
            for v in g.neighbors(u) & alive {
                if v < u {
                    continue;
                }
                let mut rows = g.rows().to_vec();
                rows[u].remove(v);
                rows[v].remove(u);
                let h = Graph::from_rows(rows).expect("edge removal keeps the graph simple");
                if alpha_within(&h, alive) == alpha {
                    next = Some(h);
                    break 'edges;
                }
            }
        }
        g = next?;
    }
}

/// The induction alone, without cross-checks; `None` if it stalls.
pub fn hajnal_by_induction(g: &Graph) -> Option<usize> {
    hajnal_descend(g.clone(), g.vertices())
}

/// A vertex lying in every maximum independent set, when `2*alpha > n`.
///
/// The vertex comes from the constructive induction and is cross-checked
/// against the full list of maximum independent sets; should the induction
/// stall, the smallest common vertex is returned instead.
pub fn hajnal_common_vertex(g: &Graph) -> Result<usize> {
    if g.n() > ALL_MIS_CAP {
        return Err(Error::cap("common-vertex search", g.n(), ALL_MIS_CAP));
    }
    let alpha = alpha_within(g, g.vertices());
    if 2 * alpha <= g.n() {
        return Err(Error::precondition(format!(
            "need alpha > n/2, got alpha = {alpha} with n = {}",
            g.n()
        )));
    }
    let common = all_maximum_independent_sets(g)?
        .into_iter()
        .fold(g.vertices(), |acc, s| acc & s);
    match hajnal_by_induction(g) {
        Some(v) if common.contains(v) => Ok(v),
        Some(v) => Err(Error::CrossCheck(format!(
            "vertex {v} misses a maximum independent set"
        ))),
        None => common
            .first()
            .ok_or_else(|| Error::CrossCheck("no vertex is common to all maximum independent sets".into())),
    }
}

/// Largest `n` accepted by [`audit_proof_inequalities`].
pub const AUDIT_CAP: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SplitViolation {
    pub x: VertexSet,
    pub chi: usize,
    pub chi_x: usize,
    pub chi_rest: usize,
}

/// Quantities of the even-cycle step for one induced even cycle `C`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvenCycleAudit {
    pub cycle: Vec<usize>,
    pub p: usize,
    /// `f` of the contracted graph.
    pub contracted_f: i64,
    /// Witness `H'` of the contracted graph, in its own indices.
    pub h_prime: PotentialWitness,
    /// `H`: the preimage of `H'` without `a, b`, plus `C`, in source indices.
    pub h: PotentialWitness,
    pub alpha_gap: i64,
    pub gap_at_most_p_minus_1: bool,
    /// `rho(H) >= rho(H') + |C| - 2 - 2*(alpha(H) - alpha(H'))`.
    pub potential_step_holds: bool,
}

/// Exploratory report; these properties describe a hypothetical minimal
/// counterexample and routinely fail on ordinary graphs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProofAudit {
    /// `chi(G) >= chi(G[X]) + chi(G - X) - 1` for every `X`.
    pub split_holds: bool,
    /// First `X` in mask order breaking the split inequality.
    pub split_violation: Option<SplitViolation>,
    pub even_cycles: Vec<EvenCycleAudit>,
    pub diamond_free: bool,
    pub even_hole_free: bool,
}

pub fn audit_proof_inequalities(g: &Graph) -> Result<ProofAudit> {
    let n = g.n();
    if n > AUDIT_CAP {
        return Err(Error::cap("proof audit", n, AUDIT_CAP));
    }
    let chi = chromatic_numbers_all_subsets(g)?;
    let all = g.vertices().mask() as usize;
    let chi_g = chi[all] as usize;
    let split_violation = (0..=all)
        .map(|x| (x, chi[x] as usize, chi[all ^ x] as usize))
        .find(|&(_, cx, cr)| chi_g + 1 < cx + cr)
        .map(|(x, chi_x, chi_rest)| SplitViolation {
            x: VertexSet::from_mask(x as u64),
            chi: chi_g,
            chi_x,
            chi_rest,
        });

    let mut even_cycles = Vec::new();
    for cycle in induced_even_cycles(g)? {
        let (contracted, trace) = even_cycle_contraction(g, &cycle)?;
        let (contracted_f, h_prime) = folkman_number(&contracted)?;
        let on_cycle: VertexSet = cycle.iter().collect();
        let ab: VertexSet = trace.created.iter().collect();
        let h_set = on_cycle
            | (g.vertices() - on_cycle)
                .iter()
                .filter(|&v| {
                    let i = trace.map[v].unwrap();
                    h_prime.subset.contains(i) && !ab.contains(i)
                })
                .collect();
        let alpha_h = alpha_within(g, h_set);
        let h = PotentialWitness {
            subset: h_set,
            alpha: alpha_h,
            rho: potential_of(h_set.len(), alpha_h),
        };
        let p = cycle.len() / 2;
        let alpha_gap = alpha_h as i64 - h_prime.alpha as i64;
        even_cycles.push(EvenCycleAudit {
            p,
            contracted_f,
            h_prime,
            h,
            alpha_gap,
            gap_at_most_p_minus_1: alpha_gap < p as i64,
            potential_step_holds: h.rho >= h_prime.rho + cycle.len() as i64 - 2 - 2 * alpha_gap,
            cycle,
        });
    }
    Ok(ProofAudit {
        split_holds: split_violation.is_none(),
        split_violation,
        even_hole_free: find_induced_even_cycle(g)?.is_none(),
        even_cycles,
        diamond_free: diamond_configurations(g).is_empty(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, complete_bipartite, cycle, path};
    use crate::solvers::chromatic_number;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().collect()
    }

    fn diamond() -> Graph {
        // x = 0, y = 1, u = 2, v = 3
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()
    }

    #[test]
    fn contraction() {
        let (h, t) = even_cycle_contraction(&cycle(6).unwrap(), &[0, 1, 2, 3, 4, 5]).unwrap();
        assert_eq!((h.n(), h.edge_count()), (2, 1));
        assert_eq!(t.merged, vec![set(&[0, 2, 4]), set(&[1, 3, 5])]);
        assert_eq!(t.created, vec![0, 1]);

        let k23 = complete_bipartite(2, 3).unwrap();
        let (h, t) = even_cycle_contraction(&k23, &[0, 2, 1, 3]).unwrap();
        assert_eq!(h.n(), 3);
        assert!(t.map.iter().all(Option::is_some));

        let c5 = cycle(5).unwrap();
        assert!(matches!(
            even_cycle_contraction(&c5, &[0, 1, 2, 3, 4]),
            Err(Error::PreconditionViolated(_))
        ));
        let chorded = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        assert!(even_cycle_contraction(&chorded, &[0, 1, 2, 3]).is_err());
    }

    #[test]
    fn diamonds() {
        let (h, t) = diamond_reduction(&diamond(), 0, 1, 2, 3).unwrap();
        assert_eq!(h.n(), 1);
        assert_eq!(t.created, vec![0]);
        assert_eq!(t.removed, set(&[0, 1]));
        assert!(diamond_reduction(&complete(4).unwrap(), 0, 1, 2, 3).is_err());
        assert!(diamond_reduction(&diamond(), 2, 3, 0, 1).is_err());

        // diamond on 0..4 with pendants 4 (on u) and 5 (on v)
        let host = Graph::from_edges(
            6,
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 5)],
        )
        .unwrap();
        let (h, t) = diamond_reduction(&host, 0, 1, 2, 3).unwrap();
        assert_eq!((h.n(), h.edge_count()), (3, 2));
        let w = t.created[0];
        assert_eq!(h.neighbors(w), set(&[t.map[4].unwrap(), t.map[5].unwrap()]));
    }

    #[test]
    fn apex() {
        let (h, t) = apex_replacement(&diamond(), 0, 1).unwrap();
        assert_eq!(h.n(), 3);
        assert_eq!(h.neighbors(t.created[0]), set(&[0, 1]));
        assert_eq!(h.edge_count(), 2);

        let (h, _) = apex_replacement(&complete(3).unwrap(), 0, 1).unwrap();
        assert_eq!((h.n(), h.edge_count()), (2, 1));
        let (h, t) = apex_replacement(&complete(2).unwrap(), 0, 1).unwrap();
        assert_eq!((h.n(), h.edge_count(), t.created[0]), (1, 0, 0));
        assert!(apex_replacement(&path(3).unwrap(), 0, 2).is_err());
    }

    #[test]
    fn lifting_is_proper() {
        let g = cycle(6).unwrap();
        let (h, t) = even_cycle_contraction(&g, &[0, 1, 2, 3, 4, 5]).unwrap();
        let (_, phi) = chromatic_number(&h, SolverBudget::unlimited()).unwrap();
        assert!(lift_coloring(&g, &t, &phi).unwrap().is_proper(&g));

        let (h, t) = diamond_reduction(&diamond(), 0, 1, 2, 3).unwrap();
        let (_, phi) = chromatic_number(&h, SolverBudget::unlimited()).unwrap();
        let lifted = lift_coloring(&diamond(), &t, &phi).unwrap();
        assert!(lifted.is_proper(&diamond()));
        assert_eq!(lifted.k(), 3);
    }

    #[test]
    fn clique_extension() {
        // triangle 0,1,2 with pendants 3,4 on 0; 5 on 1; 6,7 on 2
        let g = Graph::from_edges(
            8,
            &[(0, 1), (1, 2), (0, 2), (0, 3), (0, 4), (1, 5), (2, 6), (2, 7)],
        )
        .unwrap();
        let phi = ColoringCertificate::new(vec![1, 1, 3, 1, 4]).unwrap();
        let ext = extend_coloring_over_clique(&g, &[0, 1, 2], &phi).unwrap();
        assert!(ext.is_proper(&g));
        // pendants 3 and 4 clash with u_1 and move to c = 5
        assert_eq!(ext.colors(), &[1, 2, 3, 5, 5, 3, 1, 4]);
        assert_eq!(ext.k(), 5);

        let single = extend_coloring_over_clique(
            &Graph::from_edges(3, &[(1, 2)]).unwrap(),
            &[0],
            &ColoringCertificate::new(vec![1, 2]).unwrap(),
        )
        .unwrap();
        assert_eq!(single.colors(), &[1, 1, 2]);

        let star = complete_bipartite(1, 3).unwrap();
        let ext = extend_coloring_over_clique(&star, &[0], &ColoringCertificate::new(vec![1, 1, 1]).unwrap()).unwrap();
        assert_eq!(ext.colors(), &[1, 2, 2, 2]);

        let shared = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert!(extend_coloring_over_clique(&shared, &[0, 1], &ColoringCertificate::new(vec![1]).unwrap()).is_err());
        let improper = ColoringCertificate::new(vec![1, 1]).unwrap();
        assert!(extend_coloring_over_clique(&Graph::from_edges(3, &[(1, 2)]).unwrap(), &[0], &improper).is_err());
    }

    #[test]
    fn odd_cycle_extension() {
        let mut edges: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend((0..5).map(|i| (i, i + 5)));
        let g = Graph::from_edges(10, &edges).unwrap();
        let phi = ColoringCertificate::new(vec![1; 5]).unwrap();
        let ext = extend_coloring_over_odd_cycle(&g, &[0, 1, 2, 3, 4], &phi).unwrap();
        assert!(ext.is_proper(&g));
        assert_eq!(&ext.colors()[..5], &[2, 1, 2, 1, 3]);
        assert_eq!(&ext.colors()[5..], &[1, 2, 1, 2, 1]);

        let c7 = cycle(7).unwrap();
        let ext = extend_coloring_over_odd_cycle(&c7, &(0..7).collect::<Vec<_>>(), &ColoringCertificate::empty()).unwrap();
        assert!(ext.verify(&c7) && ext.k() == 3);

        let bad = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 0), (5, 2)]).unwrap();
        let err = extend_coloring_over_odd_cycle(&bad, &[0, 1, 2, 3, 4], &ColoringCertificate::new(vec![1]).unwrap());
        assert!(matches!(err, Err(Error::PreconditionViolated(m)) if m.contains("neighbours on the cycle")));
        assert!(extend_coloring_over_odd_cycle(&cycle(6).unwrap(), &[0, 1, 2, 3, 4, 5], &ColoringCertificate::empty()).is_err());
    }

    #[test]
    fn common_vertex() {
        assert_eq!(hajnal_common_vertex(&path(3).unwrap()).unwrap(), 0);
        assert_eq!(hajnal_common_vertex(&Graph::edgeless(4).unwrap()).unwrap(), 0);
        assert!(matches!(
            hajnal_common_vertex(&cycle(4).unwrap()),
            Err(Error::PreconditionViolated(_))
        ));
        let star = complete_bipartite(1, 4).unwrap();
        assert_eq!(hajnal_common_vertex(&star).unwrap(), 1);
    }

    #[test]
    fn audits() {
        let a = audit_proof_inequalities(&cycle(5).unwrap()).unwrap();
        assert!(a.split_holds && a.even_hole_free && a.diamond_free);

        let two_triangles =
            Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let a = audit_proof_inequalities(&two_triangles).unwrap();
        assert!(!a.split_holds);
        assert_eq!(a.split_violation.unwrap().x, set(&[0, 1]));

        let a = audit_proof_inequalities(&cycle(6).unwrap()).unwrap();
        assert!(!a.even_hole_free);
        assert_eq!(a.even_cycles.len(), 1);
        let e = &a.even_cycles[0];
        assert_eq!((e.p, e.contracted_f), (3, 2));
        assert!(e.potential_step_holds);

        assert!(audit_proof_inequalities(&Graph::edgeless(13).unwrap()).is_err());
    }
}
