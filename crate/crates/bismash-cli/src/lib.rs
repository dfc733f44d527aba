//! Front end for `bismash`: census tables, counts and verification runs.
//!
//! [`run`] takes the argument list and two sinks, so tests drive the same
//! path as the binary. Data goes to `out` (or `--out FILE`), diagnostics to `err`.

mod commands;
mod output;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

pub use output::Format;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] bismash_core::Error),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0} check(s) failed")]
    Mismatch(usize),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(bismash_core::Error::WorkloadExceeded { .. }) => 2,
            CliError::Mismatch(_) => 3,
            _ => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "bismash", version, about = "Frobenius-Schur indicators of J_n = k^{S_{n-1}} # kC_n")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// One row per irrep: orbit representative, t, i, indicator.
    Indicators {
        #[arg(long)]
        n: usize,
        /// Only irreps of this dimension.
        #[arg(long)]
        t: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Closed-form counts over the divisors of n.
    Count {
        /// Degree; for `ratios` the largest m (default 200).
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum)]
        quantity: Quantity,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        /// Residue j mod n/t, for Oj.
        #[arg(long)]
        j: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Closed form against brute force, counts against enumeration, Hopf axioms.
    Verify {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write data here instead of stdout.
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
    /// Candidate budget for enumeration.
    #[arg(long, env = bismash_core::construct::MAX_WORK_ENV)]
    pub max_work: Option<u128>,
    /// Worker threads, 0 = one per core.
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Quantity {
    #[value(name = "M")]
    M,
    #[value(name = "T")]
    T,
    #[value(name = "R")]
    R,
    #[value(name = "X")]
    X,
    #[value(name = "O")]
    O,
    #[value(name = "Oj")]
    Oj,
    #[value(name = "Iplus")]
    Iplus,
    #[value(name = "Izero")]
    Izero,
    #[value(name = "It2")]
    It2,
    #[value(name = "ratios")]
    Ratios,
}

impl Quantity {
    pub fn name(self) -> &'static str {
        match self {
            Quantity::M => "M",
            Quantity::T => "T",
            Quantity::R => "R",
            Quantity::X => "X",
            Quantity::O => "O",
            Quantity::Oj => "Oj",
            Quantity::Iplus => "Iplus",
            Quantity::Izero => "Izero",
            Quantity::It2 => "It2",
            Quantity::Ratios => "ratios",
        }
    }
}

impl Common {
    fn workload(&self) -> bismash_core::construct::Workload {
        match self.max_work {
            Some(limit) => bismash_core::construct::Workload::new(limit),
            None => bismash_core::construct::Workload::default(),
        }
    }
}

fn set_threads(threads: usize) {
    if threads > 0 {
        // a second call in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    }
}

/// Parse `args` (program name first) and run; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match execute(cli, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    let common = match &cli.command {
        Command::Indicators { common, .. } | Command::Count { common, .. } | Command::Verify { common, .. } => {
            common.clone()
        }
    };
    set_threads(common.threads);
    let work = common.workload();
    let table = match cli.command {
        Command::Indicators { n, t, .. } => commands::indicators(n, t, &work, err)?,
        Command::Count { n, quantity, t, r, j, .. } => commands::count(n, quantity, t, r, j)?,
        Command::Verify { n, .. } => {
            let (table, failures) = commands::verify(n, &work, err)?;
            output::emit(&table, &common, out)?;
            if failures > 0 {
                return Err(CliError::Mismatch(failures));
            }
            return Ok(());
        }
    };
    output::emit(&table, &common, out)
}
