//! `alpha_p`, the `f_p` objective with a rational coefficient, generalised
//! Mycielski arithmetic, exact `mir` of Mycielski graphs, and a small
//! odd-cycle-transversal search over near-bipartite graphs.

use std::ops::ControlFlow;

use num_rational::Ratio;
use serde::Serialize;

use crate::budget::SolverBudget;
use crate::constructions::{cycle, generalized_mycielski, generalized_mycielski_order, mycielski_iterated};
use crate::enumerate::enumerate_up_to;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::invariants::{folkman_number, min_independence_ratio, ratio_str, MinIndependenceRatio, Rational};
use crate::io::write_graph6;
use crate::solvers::{
    chromatic_number, chromatic_numbers_all_subsets, independence_number,
    independence_numbers_all_subsets, is_k_colorable, odd_cycle_transversal,
};
use crate::subsets::for_each_k_subset;

/// Largest `n` for [`alpha_p`].
pub const ALPHA_P_CAP: usize = 20;
/// Largest `n` for exact values inside [`audit_generalized_mycielski`].
pub const EXACT_AUDIT_CAP: usize = 20;
/// Largest `n_max` for [`reed_gap`].
pub const REED_GAP_CAP: usize = 8;

fn check_p(p: usize) -> Result<()> {
    if p == 0 {
        Err(Error::malformed("p must be at least 1"))
    } else {
        Ok(())
    }
}

/// Largest `S` with `chi(G[S]) <= p`; the witness is the least mask among
/// the largest such sets.
pub fn alpha_p(g: &Graph, p: usize) -> Result<(usize, VertexSet)> {
    check_p(p)?;
    if g.n() > ALPHA_P_CAP {
        return Err(Error::cap("alpha_p subset search", g.n(), ALPHA_P_CAP));
    }
    let colorable = |s: VertexSet| match p {
        1 => g.is_independent(s),
        2 => g.bipartition(s).is_some(),
        _ => is_k_colorable(&g.induced(s).expect("subset of V"), p, SolverBudget::unlimited())
            .expect("unlimited budget")
            .is_some(),
    };
    // a p-colourable set is p independent sets
    let (alpha, _) = independence_number(g, SolverBudget::unlimited())?;
    let top = (p * alpha).min(g.n());
    for size in (0..=top).rev() {
        if let ControlFlow::Break(s) = for_each_k_subset(g.vertices(), size, |s| {
            if colorable(s) {
                ControlFlow::Break(s)
            } else {
                ControlFlow::Continue(())
            }
        }) {
            return Ok((size, s));
        }
    }
    unreachable!("the empty set is p-colourable")
}

/// `alpha_p(G[S])` for every mask `S`.
fn alpha_p_table(g: &Graph, p: usize) -> Result<Vec<u8>> {
    if p == 1 {
        let t = independence_numbers_all_subsets(g)?;
        return Ok(t.iter().map(|(_, a)| a as u8).collect());
    }
    let chi = chromatic_numbers_all_subsets(g)?;
    let mut table = vec![0u8; chi.len()];
    for s in 1..chi.len() {
        table[s] = if chi[s] as usize <= p {
            s.count_ones() as u8
        } else {
            VertexSet::from_mask(s as u64)
                .iter()
                .map(|v| table[s & !(1 << v)])
                .max()
                .unwrap()
        };
    }
    Ok(table)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FpObjective {
    #[serde(serialize_with = "ratio_str")]
    pub value: Rational,
    pub witness: VertexSet,
    pub alpha_p: usize,
}

/// Maximum over all `S` (the empty set included, worth `c * p`) of
/// `|S| - c * (alpha_p(G[S]) - p)`. Ties go to the smallest set, then the
/// least mask.
///
/// `p = 1` reads the independence table and accepts up to 24 vertices;
/// larger `p` needs the chromatic table and stops at 16.
pub fn f_p_objective(g: &Graph, p: usize, c: Rational) -> Result<FpObjective> {
    check_p(p)?;
    if c <= Rational::from_integer(0) {
        return Err(Error::malformed(format!("coefficient must be positive, got {c}")));
    }
    let table = alpha_p_table(g, p)?;
    let value = |size: usize, a: usize| {
        Rational::from_integer(size as i64) - c * Rational::from_integer(a as i64 - p as i64)
    };
    let mut best = FpObjective {
        value: value(0, 0),
        witness: VertexSet::EMPTY,
        alpha_p: 0,
    };
    for (m, &a) in table.iter().enumerate().skip(1) {
        let s = VertexSet::from_mask(m as u64);
        let v = value(s.len(), a as usize);
        let better = v > best.value
            || (v == best.value && (s.len(), s.mask()) < (best.witness.len(), best.witness.mask()));
        if better {
            best = FpObjective {
                value: v,
                witness: s,
                alpha_p: a as usize,
            };
        }
    }
    Ok(best)
}

type Big = Ratio<i128>;

fn overflow() -> Error {
    Error::malformed("generalised Mycielski arithmetic overflows 128 bits")
}

/// `(l+1) * 2^(k-1) - 1 - c * (l * 2^(k-1) - 2)`, exactly.
pub fn f2_expression(k: u32, ell: u64, c: Rational) -> Result<Big> {
    let pow = 1i128.checked_shl(k.checked_sub(1).ok_or_else(overflow)?).filter(|&x| x > 0);
    let pow = pow.ok_or_else(overflow)?;
    let ell = ell as i128;
    let order = (ell + 1).checked_mul(pow).ok_or_else(overflow)? - 1;
    let alpha2 = ell.checked_mul(pow).ok_or_else(overflow)?;
    let (a, b) = (*c.numer() as i128, *c.denom() as i128);
    let num = order
        .checked_mul(b)
        .and_then(|x| x.checked_sub(a.checked_mul(alpha2 - 2)?))
        .ok_or_else(overflow)?;
    Ok(Big::new(num, b))
}

/// Smallest `l >= 2` with `f2_expression(k, l, c) < k + 1`, or `None` if the
/// expression never drops below `k + 1`.
///
/// The expression is affine in `l` with slope `2^(k-1) * (1 - c)`.
pub fn failure_threshold(k: u32, c: Rational) -> Result<Option<u64>> {
    if k < 2 {
        return Err(Error::malformed("k must be at least 2"));
    }
    let target = Big::from_integer(k as i128 + 1);
    let at = |ell: u64| f2_expression(k, ell, c).map(|e| e < target);
    let (a, b) = (*c.numer() as i128, *c.denom() as i128);
    if a <= b {
        // non-increasing in c <= 1 means non-decreasing in l: fails at 2 or never
        return Ok(at(2)?.then_some(2));
    }
    // l * P * (a - b) > (P - k - 2) * b + 2a
    let pow = 1i128.checked_shl(k - 1).filter(|&x| x > 0).ok_or_else(overflow)?;
    let slope = pow.checked_mul(a - b).ok_or_else(overflow)?;
    let rhs = (pow - k as i128 - 2)
        .checked_mul(b)
        .and_then(|x| x.checked_add(2 * a))
        .ok_or_else(overflow)?;
    let ell = (rhs.div_euclid(slope) + 1).max(2);
    let ell = u64::try_from(ell).map_err(|_| overflow())?;
    debug_assert!(at(ell)?);
    Ok(Some(ell))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenMycielskiAudit {
    pub k: u32,
    pub ell: u64,
    #[serde(serialize_with = "ratio_str")]
    pub c: Rational,
    /// `(l+1) * 2^(k-1) - 1`.
    pub formula_order: Option<u64>,
    /// `l * 2^(k-1)`.
    pub formula_alpha2: Option<u64>,
    /// Exact entries are absent when the graph is too large to build and
    /// search; the formulas then stand alone.
    pub formula_only: bool,
    pub exact_order: Option<usize>,
    pub exact_alpha2: Option<usize>,
    pub exact_chi: Option<usize>,
    pub formulas_match: Option<bool>,
    #[serde(serialize_with = "ratio_str")]
    pub f2_expression: Big,
    pub target: u32,
    /// `f2_expression >= k + 1`.
    pub inequality_holds: bool,
    pub failure_threshold: Option<u64>,
}

pub fn audit_generalized_mycielski(k: u32, ell: u64, c: Rational) -> Result<GenMycielskiAudit> {
    if k < 2 || ell < 2 {
        return Err(Error::malformed(format!(
            "generalised Mycielski needs k >= 2 and l >= 2, got k = {k}, l = {ell}"
        )));
    }
    if c <= Rational::from_integer(0) {
        return Err(Error::malformed(format!("coefficient must be positive, got {c}")));
    }
    let formula_order = generalized_mycielski_order(k, ell);
    let formula_alpha2 = 1u64
        .checked_shl(k - 1)
        .filter(|&x| x > 0)
        .and_then(|pow| ell.checked_mul(pow));
    let feasible = formula_order.is_some_and(|n| n <= EXACT_AUDIT_CAP as u64);
    let (exact_order, exact_alpha2, exact_chi) = if feasible {
        let g = generalized_mycielski(k as usize, ell as usize)?;
        let (a2, _) = alpha_p(&g, 2)?;
        let (chi, _) = chromatic_number(&g, SolverBudget::unlimited())?;
        (Some(g.n()), Some(a2), Some(chi))
    } else {
        (None, None, None)
    };
    let formulas_match = exact_order.map(|n| {
        Some(n as u64) == formula_order && exact_alpha2.map(|a| a as u64) == formula_alpha2
    });
    let expr = f2_expression(k, ell, c)?;
    Ok(GenMycielskiAudit {
        k,
        ell,
        c,
        formula_order,
        formula_alpha2,
        formula_only: !feasible,
        exact_order,
        exact_alpha2,
        exact_chi,
        formulas_match,
        inequality_holds: expr >= Big::from_integer(k as i128 + 1),
        f2_expression: expr,
        target: k + 1,
        failure_threshold: failure_threshold(k, c)?,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MirEntry {
    pub k: usize,
    pub order: usize,
    #[serde(flatten)]
    pub ratio: MinIndependenceRatio,
    /// `1/k`, claimed for `k >= 3`.
    #[serde(serialize_with = "opt_ratio_str")]
    pub bound: Option<Rational>,
    pub holds: Option<bool>,
}

fn opt_ratio_str<S: serde::Serializer>(
    r: &Option<Rational>,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => serializer.collect_str(r),
        None => serializer.serialize_none(),
    }
}

/// Exact `mir(M_k)` for `2 <= k <= k_max`; `M_5` already exceeds the caps.
pub fn mycielski_mir_report(k_max: usize) -> Result<Vec<MirEntry>> {
    (2..=k_max)
        .map(|k| {
            let g = mycielski_iterated(k)?;
            let ratio = min_independence_ratio(&g)?;
            let bound = (k >= 3).then(|| Rational::new(1, k as i64));
            Ok(MirEntry {
                k,
                order: g.n(),
                holds: bound.map(|b| ratio.mir >= b),
                ratio,
                bound,
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReedGap {
    pub n_max: usize,
    pub k: usize,
    pub graphs_checked: usize,
    pub near_bipartite: usize,
    /// Largest odd cycle transversal among `k`-near-bipartite graphs.
    pub max_oct: usize,
    /// graph6 records attaining `max_oct`, in enumeration order.
    pub extremal: Vec<String>,
}

/// Over all isomorphism classes up to `n_max` vertices that are
/// `k`-near-bipartite, the largest odd cycle transversal.
pub fn reed_gap(n_max: usize, k: usize) -> Result<ReedGap> {
    if n_max > REED_GAP_CAP {
        return Err(Error::cap("near-bipartite sweep", n_max, REED_GAP_CAP));
    }
    let graphs = enumerate_up_to(n_max, true)?;
    let mut report = ReedGap {
        n_max,
        k,
        graphs_checked: graphs.len(),
        near_bipartite: 0,
        max_oct: 0,
        extremal: Vec::new(),
    };
    for g in &graphs {
        if folkman_number(g)?.0 > k as i64 + 2 {
            continue;
        }
        report.near_bipartite += 1;
        let (oct, _) = odd_cycle_transversal(g, SolverBudget::unlimited())?;
        if oct > report.max_oct {
            report.max_oct = oct;
            report.extremal.clear();
        }
        if oct == report.max_oct {
            report.extremal.push(write_graph6(g)?);
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObjectiveProbe {
    pub graph: String,
    #[serde(serialize_with = "ratio_str")]
    pub value: Rational,
    pub chi: usize,
    /// `chi <= value`.
    pub holds: bool,
}

/// Evaluates `max_H |V(H)| - c * (alpha(H) - 1)` against `chi` on `C_5` and on
/// `M_floor(c)` (when `2 <= floor(c) <= 4`): the two graphs that rule out any
/// coefficient above 2.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoefficientReport {
    #[serde(serialize_with = "ratio_str")]
    pub c: Rational,
    pub probes: Vec<ObjectiveProbe>,
    pub refuted: bool,
}

pub fn coefficient_probe(c: Rational) -> Result<CoefficientReport> {
    let mut probes = Vec::new();
    let mut probe = |name: String, g: Graph| -> Result<()> {
        let value = f_p_objective(&g, 1, c)?.value;
        let (chi, _) = chromatic_number(&g, SolverBudget::unlimited())?;
        probes.push(ObjectiveProbe {
            graph: name,
            value,
            chi,
            holds: Rational::from_integer(chi as i64) <= value,
        });
        Ok(())
    };
    probe("C5".into(), cycle(5)?)?;
    let floor = c.floor().to_integer();
    if (3..=4).contains(&floor) {
        probe(format!("M{floor}"), mycielski_iterated(floor as usize)?)?;
    }
    let refuted = probes.iter().any(|p| !p.holds);
    Ok(CoefficientReport { c, probes, refuted })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, fig1_gadget};

    fn r(a: i64, b: i64) -> Rational {
        Rational::new(a, b)
    }

    #[test]
    fn alpha_p_small() {
        let c5 = cycle(5).unwrap();
        assert_eq!(alpha_p(&c5, 1).unwrap().0, 2);
        let (a2, w) = alpha_p(&c5, 2).unwrap();
        assert_eq!((a2, w), (4, VertexSet::from_mask(0b01111)));
        assert_eq!(alpha_p(&c5, 3).unwrap().0, 5);
        assert_eq!(alpha_p(&complete(5).unwrap(), 3).unwrap().0, 3);
        assert!(alpha_p(&c5, 0).is_err());
        assert_eq!(alpha_p(&Graph::null(), 2).unwrap().0, 0);
    }

    #[test]
    fn alpha_2_of_generalized_mycielski() {
        let g = generalized_mycielski(3, 3).unwrap();
        assert_eq!(alpha_p(&g, 2).unwrap().0, 12);
    }

    #[test]
    fn objective() {
        let c5 = cycle(5).unwrap();
        assert_eq!(f_p_objective(&c5, 2, r(1, 1)).unwrap().value, r(3, 1));
        assert_eq!(f_p_objective(&c5, 1, r(2, 1)).unwrap().value, r(3, 1));
        assert_eq!(f_p_objective(&Graph::null(), 2, r(7, 3)).unwrap().value, r(14, 3));
        let g = fig1_gadget();
        assert_eq!(
            f_p_objective(&g, 1, r(2, 1)).unwrap().value,
            Rational::from_integer(folkman_number(&g).unwrap().0)
        );
        assert!(f_p_objective(&c5, 1, r(0, 1)).is_err());
    }

    #[test]
    fn expression_and_threshold() {
        // 101 * 4 - 1 - 3/2 * (400 - 2)
        assert_eq!(f2_expression(3, 100, r(3, 2)).unwrap(), Big::from_integer(-194));
        assert_eq!(failure_threshold(3, r(3, 2)).unwrap(), Some(2));
        assert_eq!(failure_threshold(3, r(11, 10)).unwrap(), Some(4));
        assert_eq!(failure_threshold(3, r(1, 1)).unwrap(), None);
        for k in 2..=6u32 {
            for c in [r(11, 10), r(3, 2), r(2, 1), r(5, 4), r(101, 100), r(1, 2), r(1, 1)] {
                let target = Big::from_integer(k as i128 + 1);
                let scan = (2..2000u64).find(|&l| f2_expression(k, l, c).unwrap() < target);
                assert_eq!(failure_threshold(k, c).unwrap(), scan, "k={k} c={c}");
            }
        }
    }

    #[test]
    fn generalized_audits() {
        let a = audit_generalized_mycielski(2, 2, r(3, 2)).unwrap();
        assert_eq!((a.exact_order, a.exact_alpha2, a.exact_chi), (Some(5), Some(4), Some(3)));
        assert_eq!(a.formulas_match, Some(true));
        let a = audit_generalized_mycielski(3, 3, r(1, 1)).unwrap();
        assert_eq!((a.formula_order, a.formula_alpha2), (Some(15), Some(12)));
        assert_eq!(a.formulas_match, Some(true));
        let a = audit_generalized_mycielski(3, 100, r(3, 2)).unwrap();
        assert!(a.formula_only && !a.inequality_holds);
    }

    #[test]
    fn mir_report() {
        let rep = mycielski_mir_report(3).unwrap();
        assert_eq!(rep[0].ratio.mir, r(2, 5));
        assert_eq!(rep[0].holds, None);
        assert_eq!(rep[1].holds, Some(true));
    }

    #[test]
    fn gaps() {
        let g = reed_gap(4, 0).unwrap();
        assert_eq!(g.max_oct, 0);
        let g = reed_gap(6, 1).unwrap();
        assert!(g.max_oct >= 2);
        assert!(g.extremal.contains(&write_graph6(&crate::enumerate::canonical_form(&fig1_gadget())).unwrap()));
    }

    #[test]
    fn coefficients() {
        assert!(!coefficient_probe(r(2, 1)).unwrap().refuted);
        let rep = coefficient_probe(r(5, 2)).unwrap();
        assert!(rep.refuted && !rep.probes[0].holds);
        let rep = coefficient_probe(r(3, 1)).unwrap();
        assert!(rep.probes[0].holds && !rep.probes[1].holds);
    }
}
