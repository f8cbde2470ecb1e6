use std::time::Instant;

use folkman_core::constructions::mycielski;
use folkman_core::invariants::{
    check_folkman_bound, folkman_number_from_table, is_k_near_bipartite, min_deletion_from_table,
    potential_of,
};
use folkman_core::io::{parse_graph6, write_graph6};
use folkman_core::proof::hajnal_common_vertex;
use folkman_core::solvers::{
    all_maximum_independent_sets, chromatic_number, independence_numbers_all_subsets,
};
use folkman_core::{Error, Graph, Result, SolverBudget};
use rayon::prelude::*;
use serde::Serialize;

use crate::args::VerifyKind;

/// Limits applied to every graph of a sweep.
#[derive(Debug, Clone, Copy)]
pub struct CheckLimits {
    pub max_n: usize,
    pub budget: SolverBudget,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub index: usize,
    pub graph6: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecordError {
    pub index: usize,
    pub message: String,
}

/// Outcome of a sweep. `checked + skipped` equals the corpus size; skipped
/// records are those failing the invariant's precondition, exceeding
/// `max_n`, running out of budget, or producing an error (unparsable input,
/// a size cap).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub corpus: String,
    pub invariant: String,
    pub corpus_size: usize,
    pub checked: usize,
    pub skipped: usize,
    pub budget_exhaustions: usize,
    pub record_errors: usize,
    pub violations: Vec<Violation>,
    pub errors: Vec<RecordError>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

enum Outcome {
    Pass,
    Violation(String),
    Skipped,
    Budget,
    Error(String),
}

fn outcome_of(r: Result<Option<String>>) -> Outcome {
    match r {
        Ok(None) => Outcome::Pass,
        Ok(Some(detail)) => Outcome::Violation(detail),
        Err(e) if e.is_budget() => Outcome::Budget,
        Err(Error::CrossCheck(m)) => Outcome::Violation(m),
        Err(e) => Outcome::Error(e.to_string()),
    }
}

/// `Ok(None)` passes, `Ok(Some(detail))` is a violation.
type Check = Result<Option<String>>;

fn check_folkman(g: &Graph, budget: SolverBudget) -> Check {
    let r = check_folkman_bound(g, budget)?;
    if !r.coloring.verify(g) {
        return Ok(Some("colouring certificate fails verification".into()));
    }
    Ok((!r.holds).then(|| format!("chi = {} exceeds f = {}", r.chi, r.f)))
}

fn check_hajnal(g: &Graph) -> Check {
    let v = hajnal_common_vertex(g)?;
    let sets = all_maximum_independent_sets(g)?;
    let common = sets.iter().fold(g.vertices(), |acc, &s| acc & s);
    if common.is_empty() {
        return Ok(Some("maximum independent sets have empty intersection".into()));
    }
    Ok((!common.contains(v)).then(|| format!("vertex {v} is outside the common part {common}")))
}

fn check_deletion(g: &Graph) -> Check {
    let table = independence_numbers_all_subsets(g)?;
    let (k, _) = min_deletion_from_table(&table);
    let rho = potential_of(g.n(), table.get(g.vertices()));
    let expected = (rho - 2).max(0) as usize;
    Ok((k != expected).then(|| format!("deletion number {k} but rho - 2 = {}", rho - 2)))
}

fn check_near_bipartite(g: &Graph) -> Check {
    let table = independence_numbers_all_subsets(g)?;
    let f = folkman_number_from_table(&table).rho;
    // largest half-stable subset of each S, so S needs |S| - keep[S] deletions
    let mut keep = vec![0u8; 1 << g.n()];
    let mut worst = 0;
    for (s, alpha) in table.iter() {
        let m = s.mask() as usize;
        keep[m] = if 2 * alpha >= s.len() {
            s.len() as u8
        } else {
            s.iter().map(|v| keep[m & !(1 << v)]).max().unwrap_or(0)
        };
        worst = worst.max(s.len() - keep[m] as usize);
    }
    for k in 0..=2usize {
        let direct = is_k_near_bipartite(g, k)?.holds;
        let by_f = f <= k as i64 + 2;
        let by_deletion = worst <= k;
        if direct != by_f || by_f != by_deletion {
            return Ok(Some(format!(
                "k = {k}: near-bipartite {direct}, f <= k + 2 {by_f}, max deletion <= k {by_deletion}"
            )));
        }
    }
    Ok(None)
}

fn check_mycielski_chi(g: &Graph, budget: SolverBudget) -> Check {
    let (chi, _) = chromatic_number(g, budget)?;
    let m = mycielski(g)?;
    let (chi_m, cert) = chromatic_number(&m, budget)?;
    if !cert.verify(&m) {
        return Ok(Some("colouring certificate fails verification".into()));
    }
    Ok((chi_m != chi + 1).then(|| format!("chi(G) = {chi} but chi(mu(G)) = {chi_m}")))
}

fn check_roundtrip(g: &Graph) -> Check {
    let text = write_graph6(g)?;
    let back = parse_graph6(&text)?;
    Ok((&back != g).then(|| format!("{text} parses to a different graph")))
}

fn check_one(g: &Graph, invariant: VerifyKind, limits: CheckLimits) -> Outcome {
    if g.n() > limits.max_n {
        return Outcome::Skipped;
    }
    let budget = limits.budget;
    match invariant {
        VerifyKind::Folkman => outcome_of(check_folkman(g, budget)),
        VerifyKind::Hajnal if !has_large_independent_set(g) => Outcome::Skipped,
        VerifyKind::Hajnal => outcome_of(check_hajnal(g)),
        VerifyKind::HalfStableDeletion => outcome_of(check_deletion(g)),
        VerifyKind::NearBipartiteEquiv => outcome_of(check_near_bipartite(g)),
        VerifyKind::MycielskiChi if g.n() == 0 || 2 * g.n() + 1 > folkman_core::MAX_VERTICES => {
            Outcome::Skipped
        }
        VerifyKind::MycielskiChi => outcome_of(check_mycielski_chi(g, budget)),
        VerifyKind::Roundtrip => outcome_of(check_roundtrip(g)),
    }
}

fn has_large_independent_set(g: &Graph) -> bool {
    folkman_core::solvers::independence_number(g, SolverBudget::unlimited())
        .map(|(a, _)| 2 * a > g.n())
        .unwrap_or(false)
}

/// Checks `invariant` on every record, fanning out over `parallelism`
/// threads. Results are gathered in input order, so the report does not
/// depend on the thread count.
pub fn batch_verify(
    corpus_name: &str,
    records: Vec<Result<Graph>>,
    invariant: VerifyKind,
    parallelism: usize,
    limits: CheckLimits,
    timing: bool,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(parallelism.max(1))
        .build()
        .map_err(|e| Error::Io(format!("thread pool: {e}")))?;
    let outcomes: Vec<Outcome> = pool.install(|| {
        records
            .par_iter()
            .map(|r| match r {
                Ok(g) => check_one(g, invariant, limits),
                Err(e) => Outcome::Error(format!("input: {e}")),
            })
            .collect()
    });

    let mut report = VerificationReport {
        corpus: corpus_name.to_string(),
        invariant: invariant.name().to_string(),
        corpus_size: records.len(),
        checked: 0,
        skipped: 0,
        budget_exhaustions: 0,
        record_errors: 0,
        violations: Vec::new(),
        errors: Vec::new(),
        pass: true,
        elapsed_ms: None,
    };
    for (index, (outcome, record)) in outcomes.into_iter().zip(&records).enumerate() {
        match outcome {
            Outcome::Pass => report.checked += 1,
            Outcome::Violation(detail) => {
                report.checked += 1;
                let graph6 = record
                    .as_ref()
                    .ok()
                    .and_then(|g| write_graph6(g).ok())
                    .unwrap_or_default();
                report.violations.push(Violation { index, graph6, detail });
            }
            Outcome::Skipped => report.skipped += 1,
            Outcome::Budget => {
                report.skipped += 1;
                report.budget_exhaustions += 1;
            }
            Outcome::Error(message) => {
                report.skipped += 1;
                report.record_errors += 1;
                report.errors.push(RecordError { index, message });
            }
        }
    }
    report.pass = report.violations.is_empty();
    if timing {
        report.elapsed_ms = Some(start.elapsed().as_millis());
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use folkman_core::enumerate::enumerate_graphs;

    fn limits() -> CheckLimits {
        CheckLimits {
            max_n: folkman_core::MAX_VERTICES,
            budget: SolverBudget::unlimited(),
        }
    }

    #[test]
    fn labelled_five_vertex_graphs_satisfy_folkman() {
        let records = enumerate_graphs(5, false).unwrap().map(Ok).collect();
        let r = batch_verify("n=5", records, VerifyKind::Folkman, 4, limits(), false).unwrap();
        assert_eq!((r.checked, r.violations.len()), (1024, 0));
        assert!(r.pass);
    }

    #[test]
    fn empty_corpus_passes() {
        let r = batch_verify("empty", Vec::new(), VerifyKind::Hajnal, 2, limits(), false).unwrap();
        assert_eq!((r.corpus_size, r.checked, r.skipped), (0, 0, 0));
        assert!(r.pass);
    }

    #[test]
    fn bad_records_are_counted_not_fatal() {
        let records = vec![parse_graph6("Dhc"), parse_graph6("D!!"), parse_graph6("A_")];
        let r = batch_verify("mixed", records, VerifyKind::Folkman, 1, limits(), false).unwrap();
        assert_eq!((r.checked, r.skipped, r.record_errors), (2, 1, 1));
        assert_eq!(r.errors[0].index, 1);
        assert!(r.pass);
    }

    #[test]
    fn order_is_independent_of_parallelism() {
        let records = || enumerate_graphs(5, false).unwrap().map(Ok).collect::<Vec<_>>();
        let one = batch_verify("n=5", records(), VerifyKind::Hajnal, 1, limits(), false).unwrap();
        let many = batch_verify("n=5", records(), VerifyKind::Hajnal, 8, limits(), false).unwrap();
        assert_eq!(one, many);
        assert_eq!(one.checked + one.skipped, one.corpus_size);
    }
}
