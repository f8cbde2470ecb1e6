//! The `folkman` command line: invariant computation, corpus verification,
//! constructions, reductions and audits over small graphs.
//!
//! Exit statuses: 0 success, 1 violations found, 2 usage or input errors,
//! 3 budget exhaustion. When several apply the lowest-numbered non-zero one
//! that is not 3 wins, so an input error is never masked by a violation and
//! a violation is never masked by an exhausted budget.

pub mod args;
mod commands;
mod output;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::time::Duration;

use clap::Parser;
use folkman_core::{SolverBudget, MAX_VERTICES};

pub use args::{Cli, Command, OutputMode};
pub use verify::{batch_verify, CheckLimits, VerificationReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Fully resolved settings for one invocation.
#[derive(Debug)]
pub struct RunConfig {
    pub command: Command,
    pub output: OutputMode,
    pub max_n: usize,
    pub budget: SolverBudget,
    pub strict: bool,
    pub timing: bool,
}

impl RunConfig {
    /// Applies defaults and checks caps; flags already override the
    /// environment at parse time.
    pub fn from_cli(cli: Cli) -> Result<Self, String> {
        let max_n = cli.max_n.unwrap_or(MAX_VERTICES);
        if max_n > MAX_VERTICES {
            return Err(format!("--max-n {max_n} exceeds the supported {MAX_VERTICES} vertices"));
        }
        Ok(RunConfig {
            command: cli.command,
            output: cli.output,
            max_n,
            budget: SolverBudget {
                node_limit: cli.node_limit,
                time_limit: cli.time_limit_ms.map(Duration::from_millis),
            },
            strict: cli.strict,
            timing: cli.timing,
        })
    }
}

/// What went wrong during a run, folded into one exit status.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct Status {
    pub input_error: bool,
    pub violation: bool,
    pub budget: bool,
}

impl Status {
    pub fn code(self) -> i32 {
        if self.input_error {
            EXIT_USAGE
        } else if self.violation {
            EXIT_VIOLATION
        } else if self.budget {
            EXIT_BUDGET
        } else {
            EXIT_OK
        }
    }
}

/// Runs a parsed configuration, writing records to `out` and diagnostics to
/// `err`.
pub fn run(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> Status {
    commands::dispatch(config, out, err)
}

/// Parses `args` (program name first) and runs; returns the exit status.
pub fn main_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match RunConfig::from_cli(cli) {
        Ok(config) => run(&config, out, err).code(),
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}
