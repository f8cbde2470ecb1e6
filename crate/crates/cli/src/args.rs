use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use folkman_core::invariants::Rational;
use folkman_core::io::Format;

#[derive(Debug, Parser)]
#[command(name = "folkman", version, about = "Exact colouring and independence invariants of small graphs")]
pub struct Cli {
    /// text, or json for one JSON record per line
    #[arg(long, global = true, value_enum, default_value_t = OutputMode::Text)]
    pub output: OutputMode,

    /// Largest accepted vertex count (at most 32)
    #[arg(long, global = true, env = "FOLKMAN_MAX_N")]
    pub max_n: Option<usize>,

    /// Wall-clock budget per exact search, in milliseconds
    #[arg(long, global = true, env = "FOLKMAN_TIME_LIMIT_MS")]
    pub time_limit_ms: Option<u64>,

    /// Node budget per exact search
    #[arg(long, global = true)]
    pub node_limit: Option<u64>,

    /// Stop reading at the first malformed record
    #[arg(long, global = true)]
    pub strict: bool,

    /// Include elapsed times in reports (makes output run-dependent)
    #[arg(long, global = true)]
    pub timing: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputMode {
    Text,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct InputArgs {
    /// Input file; `-` or absent reads stdin
    #[arg(long = "in", value_name = "PATH")]
    pub input: Option<PathBuf>,

    /// graph6, dimacs or edgelist; guessed from the extension otherwise
    #[arg(long, value_parser = parse_format)]
    pub format: Option<Format>,

    /// A graph6 record given inline instead of a file
    #[arg(long, conflicts_with = "input")]
    pub graph6: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute invariants of every input graph
    Compute {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "alpha,chi,rho,f")]
        invariants: Vec<InvariantName>,
    },
    /// Check an invariant over a corpus
    Verify {
        #[arg(value_enum)]
        invariant: VerifyKind,
        /// Enumerate graphs on this many vertices instead of reading input
        #[arg(long)]
        n: Option<usize>,
        /// With --n, include every order from 0 up to n
        #[arg(long, requires = "n")]
        up_to: bool,
        /// With --n, one graph per isomorphism class
        #[arg(long, requires = "n")]
        dedup: bool,
        /// Worker threads
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Build a named graph and print it as graph6
    Construct {
        #[arg(value_enum)]
        family: FamilyName,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        ell: Option<usize>,
    },
    /// Apply a reduction to every input graph
    Reduce {
        #[arg(value_enum)]
        kind: ReduceKind,
        /// Cycle vertices in order (even-cycle); default: first induced even cycle
        #[arg(long, value_delimiter = ',')]
        cycle: Option<Vec<usize>>,
        #[arg(long)]
        x: Option<usize>,
        #[arg(long)]
        y: Option<usize>,
        #[arg(long)]
        u: Option<usize>,
        #[arg(long)]
        v: Option<usize>,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Exploratory and arithmetic audits
    Audit {
        #[command(subcommand)]
        which: AuditCommand,
    },
    /// alpha_p and the f_p objective
    Explore {
        #[command(subcommand)]
        which: ExploreCommand,
    },
}

#[derive(Debug, Subcommand)]
pub enum AuditCommand {
    /// Split inequality, even-cycle quantities, diamond and even-hole flags
    Inequalities {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Generalised Mycielski arithmetic and coefficient probes
    Conclusion {
        /// Coefficient for the f_2 expression
        #[arg(long, value_parser = parse_ratio, default_value = "3/2")]
        c: Rational,
        #[arg(long, value_delimiter = ',', default_value = "2,3")]
        k: Vec<u32>,
        #[arg(long, value_delimiter = ',', default_value = "2,3,4")]
        ell: Vec<u64>,
        /// Coefficients probed against C5 and M_floor(c)
        #[arg(long, value_parser = parse_ratio, value_delimiter = ',', default_value = "2,5/2,3")]
        c1: Vec<Rational>,
    },
    /// Exact minimum independence ratio of M_2 .. M_k
    MirMycielski {
        #[arg(long, default_value_t = 4)]
        k_max: usize,
    },
    /// Largest odd cycle transversal among k-near-bipartite graphs
    ReedGap {
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum ExploreCommand {
    /// Largest p-colourable induced subgraph
    AlphaP {
        #[arg(long)]
        p: usize,
        #[command(flatten)]
        input: InputArgs,
    },
    /// max over S of |S| - c * (alpha_p(G[S]) - p)
    #[command(name = "f-p")]
    FP {
        #[arg(long)]
        p: usize,
        #[arg(long, value_parser = parse_ratio)]
        c: Rational,
        #[command(flatten)]
        input: InputArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InvariantName {
    Alpha,
    Omega,
    Chi,
    Rho,
    F,
    Mir,
    Deletion,
    Oct,
    Girth,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyKind {
    Folkman,
    Hajnal,
    HalfStableDeletion,
    NearBipartiteEquiv,
    MycielskiChi,
    #[value(alias = "graph6-roundtrip")]
    Roundtrip,
}

impl VerifyKind {
    pub fn name(self) -> &'static str {
        match self {
            VerifyKind::Folkman => "folkman",
            VerifyKind::Hajnal => "hajnal",
            VerifyKind::HalfStableDeletion => "half-stable-deletion",
            VerifyKind::NearBipartiteEquiv => "near-bipartite-equiv",
            VerifyKind::MycielskiChi => "mycielski-chi",
            VerifyKind::Roundtrip => "roundtrip",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    Cycle,
    Path,
    Complete,
    Edgeless,
    Kbipartite,
    Fig1,
    Mycielski,
    GenMycielski,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReduceKind {
    EvenCycle,
    Diamond,
    Apex,
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e: folkman_core::Error| e.to_string())
}

pub fn parse_ratio(s: &str) -> Result<Rational, String> {
    let r: Rational = s.trim().parse().map_err(|e| format!("not a rational {s:?}: {e}"))?;
    Ok(r)
}
