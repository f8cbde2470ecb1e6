use std::io::Write;
use std::time::Instant;

use folkman_core::constructions::{
    complete, complete_bipartite, cycle, edgeless, fig1_gadget, generalized_mycielski,
    mycielski_iterated, path,
};
use folkman_core::enumerate::{enumerate_graphs, enumerate_up_to};
use folkman_core::exploration::{
    alpha_p, audit_generalized_mycielski, coefficient_probe, f_p_objective, mycielski_mir_report,
    reed_gap,
};
use folkman_core::invariants::{
    folkman_number, min_deletion_to_half_stable, min_independence_ratio, potential,
    MinIndependenceRatio, Rational,
};
use folkman_core::io::{write_graph6, Format, GraphStream};
use folkman_core::proof::{
    apex_replacement, audit_proof_inequalities, diamond_reduction, even_cycle_contraction,
    ProofAudit, ReductionTrace,
};
use folkman_core::solvers::{
    chromatic_number, clique_number, diamond_configurations, find_induced_even_cycle,
    independence_number, odd_cycle_transversal, shortest_cycle,
};
use folkman_core::{Error, Graph, Result, VertexSet};
use serde::Serialize;

use crate::args::{
    AuditCommand, Command, ExploreCommand, FamilyName, InputArgs, InvariantName, OutputMode,
    ReduceKind,
};
use crate::output::Emitter;
use crate::verify::{batch_verify, CheckLimits};
use crate::{RunConfig, Status};

struct Ctx<'a, 'w> {
    config: &'a RunConfig,
    emit: Emitter<'w>,
    err: &'w mut dyn Write,
    status: Status,
}

impl Ctx<'_, '_> {
    fn emit<T: Serialize>(&mut self, kind: &str, body: &T) {
        let _ = self.emit.record(kind, body);
    }

    /// Reports `e` against `at` and folds it into the exit status.
    fn fail(&mut self, at: &str, e: &Error) {
        let _ = writeln!(self.err, "error: {at}: {e}");
        match e.root() {
            Error::BudgetExceeded { .. } => self.status.budget = true,
            Error::CrossCheck(_) => self.status.violation = true,
            _ => self.status.input_error = true,
        }
    }
}

pub fn dispatch(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> Status {
    let mut ctx = Ctx {
        config,
        emit: Emitter::new(config.output, out),
        err,
        status: Status::default(),
    };
    match &config.command {
        Command::Compute { input, invariants } => compute(&mut ctx, input, invariants),
        Command::Verify {
            invariant,
            n,
            up_to,
            dedup,
            jobs,
            input,
        } => {
            let corpus = match n {
                Some(n) => enumerated(*n, *up_to, *dedup),
                None => read_input(&mut ctx, input).map(|(name, records)| {
                    (name, records.into_iter().map(|(_, r)| r).collect())
                }),
            };
            match corpus {
                Ok((name, records)) => {
                    let limits = CheckLimits {
                        max_n: config.max_n,
                        budget: config.budget,
                    };
                    match batch_verify(&name, records, *invariant, *jobs, limits, config.timing) {
                        Ok(report) => {
                            for e in &report.errors {
                                let _ = writeln!(ctx.err, "error: {name}: record {}: {}", e.index, e.message);
                            }
                            ctx.status.input_error |= report.record_errors > 0;
                            ctx.status.violation |= !report.pass;
                            ctx.status.budget |= report.budget_exhaustions > 0;
                            ctx.emit("verification", &report);
                        }
                        Err(e) => ctx.fail("verify", &e),
                    }
                }
                Err(e) => ctx.fail("corpus", &e),
            }
        }
        Command::Construct {
            family,
            n,
            a,
            b,
            k,
            ell,
        } => construct(&mut ctx, *family, *n, *a, *b, *k, *ell),
        Command::Reduce {
            kind,
            cycle,
            x,
            y,
            u,
            v,
            input,
        } => {
            let params = ReduceParams {
                kind: *kind,
                cycle: cycle.clone(),
                x: *x,
                y: *y,
                u: *u,
                v: *v,
            };
            reduce(&mut ctx, input, &params)
        }
        Command::Audit { which } => audit(&mut ctx, which),
        Command::Explore { which } => explore(&mut ctx, which),
    }
    ctx.status
}

fn enumerated(n: usize, up_to: bool, dedup: bool) -> Result<(String, Vec<Result<Graph>>)> {
    let graphs: Vec<Graph> = if up_to {
        enumerate_up_to(n, dedup)?
    } else {
        enumerate_graphs(n, dedup)?.collect()
    };
    let name = format!(
        "{}{n},{}",
        if up_to { "n<=" } else { "n=" },
        if dedup { "dedup" } else { "labelled" }
    );
    Ok((name, graphs.into_iter().map(Ok).collect()))
}

/// A diagnostic label and the record it names.
type Labelled = (String, Result<Graph>);

/// Reads every record of the selected input. Each record is paired with a
/// label for diagnostics; graphs above `--max-n` become errors.
fn read_input(ctx: &mut Ctx, input: &InputArgs) -> Result<(String, Vec<Labelled>)> {
    let strict = ctx.config.strict;
    let (name, stream) = if let Some(g6) = &input.graph6 {
        let format = input.format.unwrap_or(Format::Graph6);
        ("--graph6".to_string(), GraphStream::from_text(g6.clone(), format, strict))
    } else {
        match input.input.as_deref() {
            Some(p) if p.as_os_str() != "-" => {
                let format = input.format.unwrap_or_else(|| Format::from_extension(p));
                (p.display().to_string(), GraphStream::from_path(p, format, strict)?)
            }
            _ => {
                let format = input.format.unwrap_or(Format::Graph6);
                ("stdin".to_string(), GraphStream::stdin(format, strict))
            }
        }
    };
    let max_n = ctx.config.max_n;
    let records = stream
        .enumerate()
        .map(|(i, r)| {
            let r = r.and_then(|g| {
                if g.n() > max_n {
                    Err(Error::SizeCapExceeded {
                        what: "graph order (--max-n)",
                        size: g.n(),
                        cap: max_n,
                    })
                } else {
                    Ok(g)
                }
            });
            (format!("{name}: record {i}"), r)
        })
        .collect();
    Ok((name, records))
}

/// Runs `each` on every readable input graph, reporting unreadable ones.
fn for_each_input(
    ctx: &mut Ctx,
    input: &InputArgs,
    mut each: impl FnMut(&mut Ctx, usize, &Graph) -> Result<()>,
) {
    let records = match read_input(ctx, input) {
        Ok((_, records)) => records,
        Err(e) => return ctx.fail("input", &e),
    };
    for (index, (label, record)) in records.into_iter().enumerate() {
        let outcome = record.and_then(|g| each(ctx, index, &g));
        if let Err(e) = outcome {
            ctx.fail(&label, &e);
        }
    }
}

#[derive(Serialize)]
struct Valued<T> {
    value: T,
    witness: VertexSet,
}

#[derive(Serialize)]
struct ChiValue {
    value: usize,
    coloring: Vec<u32>,
}

#[derive(Serialize)]
struct Girth {
    /// Absent for forests.
    value: Option<usize>,
    cycle: Vec<usize>,
}

#[derive(Serialize, Default)]
struct ComputeRecord {
    index: usize,
    graph6: String,
    n: usize,
    edges: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha: Option<Valued<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    omega: Option<Valued<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    chi: Option<ChiValue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rho: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    f: Option<Valued<i64>>,
    /// Null for the null graph, which has no non-empty induced subgraph.
    #[serde(skip_serializing_if = "Option::is_none")]
    mir: Option<Option<MinIndependenceRatio>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    deletion: Option<Valued<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oct: Option<Valued<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    girth: Option<Girth>,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u128>,
}

fn compute(ctx: &mut Ctx, input: &InputArgs, wanted: &[InvariantName]) {
    let budget = ctx.config.budget;
    let timing = ctx.config.timing;
    for_each_input(ctx, input, |ctx, index, g| {
        let start = Instant::now();
        let mut rec = ComputeRecord {
            index,
            graph6: write_graph6(g)?,
            n: g.n(),
            edges: g.edge_count(),
            ..Default::default()
        };
        for inv in wanted {
            match inv {
                InvariantName::Alpha => {
                    let (value, witness) = independence_number(g, budget)?;
                    rec.alpha = Some(Valued { value, witness });
                }
                InvariantName::Omega => {
                    let (value, witness) = clique_number(g, budget)?;
                    rec.omega = Some(Valued { value, witness });
                }
                InvariantName::Chi => {
                    let (value, cert) = chromatic_number(g, budget)?;
                    rec.chi = Some(ChiValue {
                        value,
                        coloring: cert.colors().to_vec(),
                    });
                }
                InvariantName::Rho => rec.rho = Some(potential(g)),
                InvariantName::F => {
                    let (value, w) = folkman_number(g)?;
                    rec.f = Some(Valued {
                        value,
                        witness: w.subset,
                    });
                }
                InvariantName::Mir => {
                    rec.mir = Some(if g.n() == 0 {
                        None
                    } else {
                        Some(min_independence_ratio(g)?)
                    });
                }
                InvariantName::Deletion => {
                    let (value, witness) = min_deletion_to_half_stable(g)?;
                    rec.deletion = Some(Valued { value, witness });
                }
                InvariantName::Oct => {
                    let (value, witness) = odd_cycle_transversal(g, budget)?;
                    rec.oct = Some(Valued { value, witness });
                }
                InvariantName::Girth => {
                    rec.girth = Some(match shortest_cycle(g) {
                        Some(c) => Girth {
                            value: Some(c.girth),
                            cycle: c.vertices,
                        },
                        None => Girth {
                            value: None,
                            cycle: Vec::new(),
                        },
                    });
                }
            }
        }
        if timing {
            rec.elapsed_ms = Some(start.elapsed().as_millis());
        }
        ctx.emit("graph_invariants", &rec);
        Ok(())
    });
}

#[derive(Serialize)]
struct Constructed<'a> {
    family: &'a str,
    n: usize,
    edges: usize,
    graph6: String,
}

fn construct(
    ctx: &mut Ctx,
    family: FamilyName,
    n: Option<usize>,
    a: Option<usize>,
    b: Option<usize>,
    k: Option<usize>,
    ell: Option<usize>,
) {
    let need = |v: Option<usize>, flag: &str| {
        v.ok_or_else(|| Error::MalformedInput(format!("{family:?} needs --{flag}").to_lowercase()))
    };
    let built = match family {
        FamilyName::Cycle => need(n, "n").and_then(cycle),
        FamilyName::Path => need(n, "n").and_then(path),
        FamilyName::Complete => need(n, "n").and_then(complete),
        FamilyName::Edgeless => need(n, "n").and_then(edgeless),
        FamilyName::Kbipartite => need(a, "a").and_then(|a| complete_bipartite(a, need(b, "b")?)),
        FamilyName::Fig1 => Ok(fig1_gadget()),
        FamilyName::Mycielski => need(k, "k").and_then(mycielski_iterated),
        FamilyName::GenMycielski => {
            need(k, "k").and_then(|k| generalized_mycielski(k, need(ell, "ell")?))
        }
    };
    let g = match built.and_then(|g| Ok((write_graph6(&g)?, g))) {
        Ok(x) => x,
        Err(e) => return ctx.fail("construct", &e),
    };
    let (graph6, g) = g;
    match ctx.emit.mode() {
        OutputMode::Text => {
            let _ = ctx.emit.line(&graph6);
        }
        OutputMode::Json => {
            let name = format!("{family:?}").to_lowercase();
            ctx.emit(
                "graph",
                &Constructed {
                    family: &name,
                    n: g.n(),
                    edges: g.edge_count(),
                    graph6,
                },
            )
        }
    }
}

struct ReduceParams {
    kind: ReduceKind,
    cycle: Option<Vec<usize>>,
    x: Option<usize>,
    y: Option<usize>,
    u: Option<usize>,
    v: Option<usize>,
}

#[derive(Serialize)]
struct Reduced {
    index: usize,
    source: String,
    result: String,
    n: usize,
    trace: ReductionTrace,
}

fn reduce(ctx: &mut Ctx, input: &InputArgs, p: &ReduceParams) {
    for_each_input(ctx, input, |ctx, index, g| {
        let (h, trace) = match p.kind {
            ReduceKind::EvenCycle => {
                let c = match &p.cycle {
                    Some(c) => c.clone(),
                    None => find_induced_even_cycle(g)?.ok_or_else(|| {
                        Error::PreconditionViolated("no induced even cycle".into())
                    })?,
                };
                even_cycle_contraction(g, &c)?
            }
            ReduceKind::Diamond => {
                let (x, y, u, v) = match (p.x, p.y, p.u, p.v) {
                    (Some(x), Some(y), Some(u), Some(v)) => (x, y, u, v),
                    (None, None, None, None) => {
                        let d = diamond_configurations(g).into_iter().next().ok_or_else(|| {
                            Error::PreconditionViolated("no diamond configuration".into())
                        })?;
                        (d.x, d.y, d.u, d.v)
                    }
                    _ => {
                        return Err(Error::MalformedInput(
                            "diamond needs all of --x --y --u --v or none".into(),
                        ))
                    }
                };
                diamond_reduction(g, x, y, u, v)?
            }
            ReduceKind::Apex => {
                let (x, y) = match (p.x, p.y) {
                    (Some(x), Some(y)) => (x, y),
                    (None, None) => g.edges().into_iter().next().ok_or_else(|| {
                        Error::PreconditionViolated("graph has no edge".into())
                    })?,
                    _ => return Err(Error::MalformedInput("apex needs both --x and --y or neither".into())),
                };
                apex_replacement(g, x, y)?
            }
        };
        let rec = Reduced {
            index,
            source: write_graph6(g)?,
            result: write_graph6(&h)?,
            n: h.n(),
            trace,
        };
        ctx.emit("reduction", &rec);
        Ok(())
    });
}

#[derive(Serialize)]
struct AuditRecord {
    index: usize,
    graph6: String,
    #[serde(flatten)]
    audit: ProofAudit,
}

fn audit(ctx: &mut Ctx, which: &AuditCommand) {
    match which {
        AuditCommand::Inequalities { input } => for_each_input(ctx, input, |ctx, index, g| {
            let rec = AuditRecord {
                index,
                graph6: write_graph6(g)?,
                audit: audit_proof_inequalities(g)?,
            };
            ctx.emit("proof_audit", &rec);
            Ok(())
        }),
        AuditCommand::Conclusion { c, k, ell, c1 } => {
            for &k in k {
                for &ell in ell {
                    match audit_generalized_mycielski(k, ell, *c) {
                        Ok(a) => {
                            ctx.status.violation |= a.formulas_match == Some(false);
                            ctx.emit("gen_mycielski", &a);
                        }
                        Err(e) => ctx.fail(&format!("k = {k}, l = {ell}"), &e),
                    }
                }
            }
            for &c in c1 {
                match coefficient_probe(c) {
                    Ok(r) => ctx.emit("coefficient_probe", &r),
                    Err(e) => ctx.fail(&format!("c = {c}"), &e),
                }
            }
        }
        AuditCommand::MirMycielski { k_max } => match mycielski_mir_report(*k_max) {
            Ok(entries) => {
                for e in &entries {
                    ctx.status.violation |= e.holds == Some(false);
                    ctx.emit("mycielski_mir", e);
                }
            }
            Err(e) => ctx.fail("mir-mycielski", &e),
        },
        AuditCommand::ReedGap { n_max, k } => match reed_gap(*n_max, *k) {
            Ok(r) => ctx.emit("reed_gap", &r),
            Err(e) => ctx.fail("reed-gap", &e),
        },
    }
}

#[derive(Serialize)]
struct AlphaPRecord {
    index: usize,
    graph6: String,
    p: usize,
    alpha_p: usize,
    witness: VertexSet,
}

#[derive(Serialize)]
struct FpRecord {
    index: usize,
    graph6: String,
    p: usize,
    #[serde(serialize_with = "ratio_str")]
    c: Rational,
    #[serde(serialize_with = "ratio_str")]
    value: Rational,
    witness: VertexSet,
    alpha_p: usize,
}

fn ratio_str<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(r)
}

fn explore(ctx: &mut Ctx, which: &ExploreCommand) {
    match which {
        ExploreCommand::AlphaP { p, input } => for_each_input(ctx, input, |ctx, index, g| {
            let (alpha_p, witness) = alpha_p(g, *p)?;
            let rec = AlphaPRecord {
                index,
                graph6: write_graph6(g)?,
                p: *p,
                alpha_p,
                witness,
            };
            ctx.emit("alpha_p", &rec);
            Ok(())
        }),
        ExploreCommand::FP { p, c, input } => for_each_input(ctx, input, |ctx, index, g| {
            let obj = f_p_objective(g, *p, *c)?;
            let rec = FpRecord {
                index,
                graph6: write_graph6(g)?,
                p: *p,
                c: *c,
                value: obj.value,
                witness: obj.witness,
                alpha_p: obj.alpha_p,
            };
            ctx.emit("f_p", &rec);
            Ok(())
        }),
    }
}
