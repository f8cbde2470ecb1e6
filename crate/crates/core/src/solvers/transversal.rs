use std::ops::ControlFlow;

use crate::budget::SolverBudget;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::subsets::for_each_k_subset;

/// Minimum odd cycle transversal: a smallest vertex set whose deletion leaves a
/// bipartite graph, least mask among those of minimum size.
///
/// Iterative deepening over the deletion-set size; each candidate costs one
/// bipartiteness check and one budget tick.
pub fn odd_cycle_transversal(g: &Graph, budget: SolverBudget) -> Result<(usize, VertexSet)> {
    let mut meter = budget.meter();
    let all = g.vertices();
    for size in 0..=g.n() {
        let found = for_each_k_subset(all, size, |x| {
            if !meter.tick() {
                return ControlFlow::Break(None);
            }
            if g.bipartition(all - x).is_some() {
                ControlFlow::Break(Some(x))
            } else {
                ControlFlow::Continue(())
            }
        });
        match found {
            ControlFlow::Break(Some(x)) => return Ok((size, x)),
            ControlFlow::Break(None) => {
                // deleting all but two vertices always works
                let upper = g.n().saturating_sub(2).max(size);
                return Err(Error::BudgetExceeded { lower: size, upper });
            }
            ControlFlow::Continue(()) => {}
        }
    }
    unreachable!("deleting every vertex leaves a bipartite graph")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn small_cases() {
        assert_eq!(odd_cycle_transversal(&cycle(4), SolverBudget::unlimited()).unwrap(), (0, VertexSet::EMPTY));
        assert_eq!(
            odd_cycle_transversal(&cycle(5), SolverBudget::unlimited()).unwrap(),
            (1, VertexSet::singleton(0))
        );
        assert_eq!(odd_cycle_transversal(&Graph::null(), SolverBudget::unlimited()).unwrap().0, 0);
    }

    #[test]
    fn budget() {
        let k6 = Graph::from_edges(6, &(0..6).flat_map(|i| (i + 1..6).map(move |j| (i, j))).collect::<Vec<_>>()).unwrap();
        assert_eq!(odd_cycle_transversal(&k6, SolverBudget::unlimited()).unwrap().0, 4);
        assert!(matches!(
            odd_cycle_transversal(&k6, SolverBudget::nodes(5)),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
