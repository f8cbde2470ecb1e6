use crate::budget::{Meter, SolverBudget};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest `n` for [`all_maximum_independent_sets`].
pub const ALL_MIS_CAP: usize = 20;
/// Largest `n` for [`independence_numbers_all_subsets`] (table of `2^n` bytes).
pub const SUBSET_TABLE_CAP: usize = 24;

/// Number of cliques in a greedy clique cover of `cand`; an upper bound on
/// the independence number of `G[cand]`.
fn clique_cover_bound(g: &Graph, cand: VertexSet) -> usize {
    let mut cliques: Vec<VertexSet> = Vec::new();
    for v in cand {
        let nbrs = g.neighbors(v);
        match cliques.iter_mut().find(|c| c.is_subset(nbrs)) {
            Some(c) => c.insert(v),
            None => cliques.push(VertexSet::singleton(v)),
        }
    }
    cliques.len()
}

fn closed(g: &Graph, v: usize) -> VertexSet {
    g.neighbors(v).with(v)
}

/// Minimum-degree greedy independent set, used to seed the search.
fn greedy_independent_set(g: &Graph, mut cand: VertexSet) -> VertexSet {
    let mut chosen = VertexSet::EMPTY;
    while !cand.is_empty() {
        let v = cand
            .iter()
            .min_by_key(|&v| ((g.neighbors(v) & cand).len(), v))
            .unwrap();
        chosen.insert(v);
        cand = cand - closed(g, v);
    }
    chosen
}

struct MisSearch<'a, 'm> {
    g: &'a Graph,
    meter: &'m mut Meter,
    best: VertexSet,
}

impl MisSearch<'_, '_> {
    fn run(&mut self, mut cand: VertexSet, mut chosen: VertexSet) {
        if !self.meter.tick() {
            return;
        }
        // a vertex of degree <= 1 lies in some maximum independent set of G[cand]
        while let Some(v) = cand
            .iter()
            .find(|&v| (self.g.neighbors(v) & cand).len() <= 1)
        {
            chosen.insert(v);
            cand = cand - closed(self.g, v);
        }
        if cand.is_empty() {
            if chosen.len() > self.best.len() {
                self.best = chosen;
            }
            return;
        }
        if chosen.len() + clique_cover_bound(self.g, cand) <= self.best.len() {
            return;
        }
        let pivot = cand
            .iter()
            .max_by_key(|&v| ((self.g.neighbors(v) & cand).len(), std::cmp::Reverse(v)))
            .unwrap();
        self.run(cand - closed(self.g, pivot), chosen.with(pivot));
        if self.meter.exhausted() {
            return;
        }
        self.run(cand.without(pivot), chosen);
    }
}

pub(crate) fn independence_number_metered(
    g: &Graph,
    cand: VertexSet,
    meter: &mut Meter,
) -> Result<(usize, VertexSet)> {
    let mut search = MisSearch {
        g,
        meter,
        best: greedy_independent_set(g, cand),
    };
    search.run(cand, VertexSet::EMPTY);
    if search.meter.exhausted() {
        return Err(Error::BudgetExceeded {
            lower: search.best.len(),
            upper: clique_cover_bound(g, cand),
        });
    }
    Ok((search.best.len(), search.best))
}

/// Independence number with a maximum independent set as witness.
///
/// Branch and bound over bit masks: vertices of degree at most one are taken
/// greedily, the branching vertex has maximum degree (lowest index on ties),
/// and a greedy clique cover bounds what the remaining candidates can add.
pub fn independence_number(g: &Graph, budget: SolverBudget) -> Result<(usize, VertexSet)> {
    independence_number_metered(g, g.vertices(), &mut budget.meter())
}

/// Independence number of `G[s]`, as a witness inside `s`.
pub fn independence_number_within(
    g: &Graph,
    s: VertexSet,
    budget: SolverBudget,
) -> Result<(usize, VertexSet)> {
    if !s.is_subset(g.vertices()) {
        return Err(Error::MalformedInput(format!("{s} is not within 0..{}", g.n())));
    }
    independence_number_metered(g, s, &mut budget.meter())
}

/// Clique number with a maximum clique as witness.
pub fn clique_number(g: &Graph, budget: SolverBudget) -> Result<(usize, VertexSet)> {
    independence_number(&g.complement(), budget)
}

pub(crate) fn clique_number_metered(g: &Graph, meter: &mut Meter) -> Result<(usize, VertexSet)> {
    let h = g.complement();
    independence_number_metered(&h, h.vertices(), meter)
}

/// Every maximum independent set, sorted by mask.
pub fn all_maximum_independent_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    if g.n() > ALL_MIS_CAP {
        return Err(Error::cap("maximum independent set enumeration", g.n(), ALL_MIS_CAP));
    }
    let (alpha, _) = independence_number(g, SolverBudget::unlimited())?;
    let mut out = Vec::new();
    collect_of_size(g, g.vertices(), VertexSet::EMPTY, alpha, &mut out);
    out.sort();
    Ok(out)
}

fn collect_of_size(g: &Graph, cand: VertexSet, chosen: VertexSet, target: usize, out: &mut Vec<VertexSet>) {
    if chosen.len() == target {
        out.push(chosen);
        return;
    }
    if chosen.len() + clique_cover_bound(g, cand) < target {
        return;
    }
    let Some(v) = cand.first() else { return };
    collect_of_size(g, cand - closed(g, v), chosen.with(v), target, out);
    collect_of_size(g, cand.without(v), chosen, target, out);
}

/// `alpha(G[S])` for every `S` subset of `V(G)`, indexed by mask.
#[derive(Clone, Debug)]
pub struct SubsetAlphaTable {
    n: usize,
    alpha: Vec<u8>,
}

impl SubsetAlphaTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, s: VertexSet) -> usize {
        self.alpha[s.mask() as usize] as usize
    }

    /// `(S, alpha(G[S]))` for all subsets in increasing mask order.
    pub fn iter(&self) -> impl Iterator<Item = (VertexSet, usize)> + '_ {
        self.alpha
            .iter()
            .enumerate()
            .map(|(m, &a)| (VertexSet::from_mask(m as u64), a as usize))
    }
}

/// Fills `alpha(S) = max(alpha(S - v), 1 + alpha(S - N[v]))` with `v` the
/// lowest vertex of `S`; both right-hand sets are numerically smaller than `S`.
pub fn independence_numbers_all_subsets(g: &Graph) -> Result<SubsetAlphaTable> {
    let n = g.n();
    if n > SUBSET_TABLE_CAP {
        return Err(Error::cap("subset independence table", n, SUBSET_TABLE_CAP));
    }
    let closed_masks: Vec<usize> = (0..n).map(|v| closed(g, v).mask() as usize).collect();
    let mut alpha = vec![0u8; 1usize << n];
    for s in 1..alpha.len() {
        let v = s.trailing_zeros() as usize;
        let skip = alpha[s & (s - 1)];
        let take = 1 + alpha[s & !closed_masks[v]];
        alpha[s] = skip.max(take);
    }
    Ok(SubsetAlphaTable { n, alpha })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((i, j));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    fn brute_alpha(g: &Graph) -> usize {
        (0u64..1 << g.n())
            .map(VertexSet::from_mask)
            .filter(|&s| g.is_independent(s))
            .map(VertexSet::len)
            .max()
            .unwrap()
    }

    #[test]
    fn small_values() {
        let c5 = cycle(5);
        assert_eq!(brute_alpha(&c5), 2);
        let (a, w) = independence_number(&c5, SolverBudget::unlimited()).unwrap();
        assert_eq!(a, 2);
        assert!(c5.is_independent(w) && w.len() == 2);
        for n in 1..=6 {
            assert_eq!(independence_number(&complete(n), SolverBudget::unlimited()).unwrap().0, 1);
        }
        assert_eq!(independence_number(&Graph::null(), SolverBudget::unlimited()).unwrap().0, 0);
    }

    #[test]
    fn budget_exhaustion_brackets_value() {
        let g = cycle(31);
        match independence_number(&g, SolverBudget::nodes(1)) {
            Err(Error::BudgetExceeded { lower, upper }) => {
                assert!(lower <= 15 && 15 <= upper, "{lower}..{upper}");
            }
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn all_maximum_sets() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            all_maximum_independent_sets(&p3).unwrap(),
            vec![[0, 2].iter().collect::<VertexSet>()]
        );
        let c4 = cycle(4);
        assert_eq!(
            all_maximum_independent_sets(&c4).unwrap(),
            vec![[0, 2].iter().collect::<VertexSet>(), [1, 3].iter().collect()]
        );
        let k3 = complete(3);
        assert_eq!(
            all_maximum_independent_sets(&k3).unwrap(),
            vec![VertexSet::singleton(0), VertexSet::singleton(1), VertexSet::singleton(2)]
        );
        assert!(all_maximum_independent_sets(&Graph::edgeless(21).unwrap()).is_err());
    }

    #[test]
    fn subset_table() {
        let c5 = cycle(5);
        let t = independence_numbers_all_subsets(&c5).unwrap();
        assert_eq!(t.get(c5.vertices()), 2);
        assert_eq!(t.get(VertexSet::EMPTY), 0);
        for v in 0..5 {
            assert_eq!(t.get(VertexSet::singleton(v)), 1);
        }
        for (s, a) in t.iter() {
            assert_eq!(a, brute_alpha(&c5.induced(s).unwrap()));
        }
        assert!(independence_numbers_all_subsets(&Graph::edgeless(25).unwrap()).is_err());
    }

    #[test]
    fn cliques() {
        let diamond = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let (w, k) = clique_number(&diamond, SolverBudget::unlimited()).unwrap();
        assert_eq!(w, 3);
        assert!(diamond.is_clique(k));
        assert_eq!(clique_number(&cycle(5), SolverBudget::unlimited()).unwrap().0, 2);
        assert_eq!(clique_number(&complete(4), SolverBudget::unlimited()).unwrap().0, 4);
    }
}
