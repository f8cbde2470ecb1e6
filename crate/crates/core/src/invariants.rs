//! Potential, Folkman number, independence ratios, half-stability and
//! near-bipartiteness.
//!
//! The potential of `H` is `|V(H)| - 2*alpha(H) + 2`; `f(G)` is the largest
//! potential over all induced subgraphs, the null subgraph included (value 2).
//! All subset sweeps run off one [`SubsetAlphaTable`].

use num_rational::Ratio;
use serde::Serialize;

use crate::budget::SolverBudget;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::solvers::{
    chromatic_number, independence_number, independence_numbers_all_subsets, ColoringCertificate,
    SubsetAlphaTable,
};

/// Exact rational; always kept reduced.
pub type Rational = Ratio<i64>;

/// Writes a rational as `num/den` (or just `num` for integers).
pub(crate) fn ratio_str<T: std::fmt::Display, S: serde::Serializer>(
    r: &T,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serializer.collect_str(r)
}

/// `|s| - 2*alpha + 2`.
pub fn potential_of(size: usize, alpha: usize) -> i64 {
    size as i64 - 2 * alpha as i64 + 2
}

/// An induced subgraph and its potential.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PotentialWitness {
    pub subset: VertexSet,
    pub alpha: usize,
    pub rho: i64,
}

impl PotentialWitness {
    fn new(subset: VertexSet, alpha: usize) -> Self {
        PotentialWitness {
            subset,
            alpha,
            rho: potential_of(subset.len(), alpha),
        }
    }
}

/// Potential of the whole graph; the null graph has potential 2.
pub fn potential(g: &Graph) -> i64 {
    let (alpha, _) = independence_number(g, SolverBudget::unlimited())
        .expect("unlimited budget cannot be exceeded");
    potential_of(g.n(), alpha)
}

/// Orders candidates by the shared tie-break: smaller subsets first, then
/// smaller masks.
fn tie_key(s: VertexSet) -> (usize, u64) {
    (s.len(), s.mask())
}

/// `f(G)` read off a precomputed table.
pub fn folkman_number_from_table(table: &SubsetAlphaTable) -> PotentialWitness {
    let mut best = PotentialWitness::new(VertexSet::EMPTY, 0);
    for (s, alpha) in table.iter() {
        let cand = PotentialWitness::new(s, alpha);
        if cand.rho > best.rho || (cand.rho == best.rho && tie_key(s) < tie_key(best.subset)) {
            best = cand;
        }
    }
    best
}

/// `f(G)` with a witness of smallest size (least mask among those).
pub fn folkman_number(g: &Graph) -> Result<(i64, PotentialWitness)> {
    let table = independence_numbers_all_subsets(g)?;
    let w = folkman_number_from_table(&table);
    Ok((w.rho, w))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MinIndependenceRatio {
    #[serde(serialize_with = "ratio_str")]
    pub mir: Rational,
    pub argmin: VertexSet,
    /// `1 / mir`.
    #[serde(serialize_with = "ratio_str")]
    pub hall_ratio: Rational,
}

pub fn min_independence_ratio_from_table(table: &SubsetAlphaTable) -> Result<MinIndependenceRatio> {
    if table.n() == 0 {
        return Err(Error::MalformedInput(
            "minimum independence ratio is undefined on the null graph".into(),
        ));
    }
    let mut best: Option<(usize, usize, VertexSet)> = None;
    for (s, alpha) in table.iter().skip(1) {
        let size = s.len();
        let better = match best {
            None => true,
            Some((a, n, arg)) => {
                let lhs = alpha * n;
                let rhs = a * size;
                lhs < rhs || (lhs == rhs && tie_key(s) < tie_key(arg))
            }
        };
        if better {
            best = Some((alpha, size, s));
        }
    }
    let (alpha, size, argmin) = best.expect("non-empty graph has a non-empty subset");
    let mir = Rational::new(alpha as i64, size as i64);
    Ok(MinIndependenceRatio {
        mir,
        argmin,
        hall_ratio: mir.recip(),
    })
}

/// Minimum of `alpha(G[S]) / |S|` over non-empty `S`, as an exact rational.
pub fn min_independence_ratio(g: &Graph) -> Result<MinIndependenceRatio> {
    min_independence_ratio_from_table(&independence_numbers_all_subsets(g)?)
}

pub fn min_deletion_from_table(table: &SubsetAlphaTable) -> (usize, VertexSet) {
    let all = VertexSet::full(table.n());
    let mut best: Option<VertexSet> = None;
    for (s, alpha) in table.iter() {
        if 2 * alpha < s.len() {
            continue;
        }
        let y = all - s;
        if best.is_none_or(|b| tie_key(y) < tie_key(b)) {
            best = Some(y);
        }
    }
    // the empty set is half-stable, so some deletion always qualifies
    let y = best.expect("deleting everything is half-stable");
    (y.len(), y)
}

/// Smallest `Y` with `G - Y` half-stable (`2*alpha >= |V|`).
pub fn min_deletion_to_half_stable(g: &Graph) -> Result<(usize, VertexSet)> {
    Ok(min_deletion_from_table(&independence_numbers_all_subsets(g)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NearBipartite {
    pub holds: bool,
    /// An induced subgraph with potential above `k + 2` when `holds` is false.
    pub violating: Option<PotentialWitness>,
}

/// Whether every induced subgraph can be made half-stable by deleting at most
/// `k` vertices, decided as `f(G) <= k + 2`.
pub fn is_k_near_bipartite(g: &Graph, k: usize) -> Result<NearBipartite> {
    let (f, witness) = folkman_number(g)?;
    let holds = f <= k as i64 + 2;
    Ok(NearBipartite {
        holds,
        violating: (!holds).then_some(witness),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FolkmanReport {
    pub chi: usize,
    pub coloring: ColoringCertificate,
    pub f: i64,
    pub witness: PotentialWitness,
    pub holds: bool,
}

/// Computes both sides of `chi(G) <= f(G)` with certificates.
pub fn check_folkman_bound(g: &Graph, budget: SolverBudget) -> Result<FolkmanReport> {
    let (f, witness) = folkman_number(g)?;
    let (chi, coloring) = chromatic_number(g, budget)?;
    Ok(FolkmanReport {
        chi,
        coloring,
        f,
        witness,
        holds: chi as i64 <= f,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, cycle, fig1_gadget, mycielski_iterated};

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().collect()
    }

    #[test]
    fn potentials() {
        assert_eq!(potential(&Graph::null()), 2);
        assert_eq!(potential(&cycle(5).unwrap()), 3);
        assert_eq!(potential(&complete(4).unwrap()), 4);
        assert_eq!(potential(&Graph::edgeless(5).unwrap()), -3);
    }

    #[test]
    fn folkman_numbers() {
        let (f, w) = folkman_number(&cycle(6).unwrap()).unwrap();
        assert_eq!(f, 2);
        assert_eq!(w.subset, VertexSet::EMPTY);
        assert_eq!(folkman_number(&Graph::null()).unwrap().0, 2);

        let (f, w) = folkman_number(&fig1_gadget()).unwrap();
        assert_eq!(f, 3);
        assert!(fig1_gadget().is_clique(w.subset) && w.subset.len() == 3);
        assert_eq!(w.subset, set(&[0, 1, 2]));

        // K1 falls below the null subgraph
        assert_eq!(folkman_number(&complete(1).unwrap()).unwrap().1.subset, VertexSet::EMPTY);
        for n in 3..=6 {
            let (f, w) = folkman_number(&complete(n).unwrap()).unwrap();
            assert_eq!(f, n as i64);
            assert_eq!(w.alpha, 1);
        }
    }

    #[test]
    fn ratios() {
        let r = min_independence_ratio(&Graph::edgeless(4).unwrap()).unwrap();
        assert_eq!(r.mir, Rational::from_integer(1));
        assert_eq!(r.argmin, VertexSet::singleton(0));
        let r = min_independence_ratio(&cycle(5).unwrap()).unwrap();
        assert_eq!(r.mir, Rational::new(2, 5));
        assert_eq!(r.argmin, VertexSet::full(5));
        assert_eq!(r.hall_ratio, Rational::new(5, 2));
        assert!(min_independence_ratio(&Graph::null()).is_err());

        let m3 = min_independence_ratio(&mycielski_iterated(3).unwrap()).unwrap();
        assert!(m3.mir >= Rational::new(1, 3));
    }

    #[test]
    fn deletions() {
        assert_eq!(min_deletion_to_half_stable(&cycle(4).unwrap()).unwrap().0, 0);
        let (k, y) = min_deletion_to_half_stable(&cycle(5).unwrap()).unwrap();
        assert_eq!((k, y), (1, VertexSet::singleton(0)));
        assert_eq!(min_deletion_to_half_stable(&complete(5).unwrap()).unwrap().0, 3);
        assert_eq!(min_deletion_to_half_stable(&Graph::null()).unwrap().0, 0);
    }

    #[test]
    fn near_bipartite() {
        let g = fig1_gadget();
        assert!(is_k_near_bipartite(&g, 1).unwrap().holds);
        let nb = is_k_near_bipartite(&g, 0).unwrap();
        assert!(!nb.holds);
        let w = nb.violating.unwrap();
        assert!(w.rho > 2 && g.is_clique(w.subset) && w.subset.len() == 3);
        assert!(is_k_near_bipartite(&cycle(8).unwrap(), 0).unwrap().holds);
    }

    #[test]
    fn bound_reports() {
        let r = check_folkman_bound(&cycle(5).unwrap(), SolverBudget::unlimited()).unwrap();
        assert_eq!((r.chi, r.f, r.holds), (3, 3, true));
        let r = check_folkman_bound(&complete(5).unwrap(), SolverBudget::unlimited()).unwrap();
        assert_eq!((r.chi, r.f, r.holds), (5, 5, true));
        let m3 = mycielski_iterated(3).unwrap();
        let r = check_folkman_bound(&m3, SolverBudget::unlimited()).unwrap();
        assert_eq!(r.chi, 4);
        assert!(r.f >= 4 && r.holds);
        assert!(r.coloring.verify(&m3));
    }
}
