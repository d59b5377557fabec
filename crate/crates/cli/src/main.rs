//! `dcosets`: double-coset and self-inverse double-coset counts from the
//! command line.

mod commands;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use commands::{Table, DATASET_DIR_ENV};
use report::{Format, Report};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] dcosets::Error),
    #[error("{0}")]
    Spec(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        use dcosets::Error::*;
        match self {
            CliError::Core(ValidationFailed(_)) => 3,
            CliError::Core(OrderLimitExceeded { .. } | SizeGuard(_)) => 4,
            _ => 2,
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "dcosets",
    version,
    about = "Count double cosets and self-inverse double cosets"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    /// Worker threads; defaults to the number of cores.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Report wall-clock time (also echoed on stderr).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reproduce one of the standard tables.
    Table {
        #[arg(value_enum)]
        name: Table,
        /// Last row to compute.
        #[arg(long)]
        max: Option<usize>,
        /// Field order for `perm-matrices`.
        #[arg(long, default_value_t = 2)]
        q: u64,
    },
    /// `H\S_n/K` for H, K given as cyclic, dihedral, young:λ, hypercube,
    /// hyperoct, polytope:NAME or genfile:PATH.
    Symmetric {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        left: String,
        /// Defaults to the left subgroup.
        #[arg(long)]
        right: Option<String>,
    },
    /// `W_I\B_n/W_J` for parabolic subgroups given by generator indices 1..=n.
    Typeb {
        #[arg(long)]
        n: usize,
        /// Comma-separated indices; may be empty.
        #[arg(
            long = "I",
            alias = "i",
            default_value = "",
            allow_hyphen_values = true
        )]
        i: String,
        /// Defaults to I.
        #[arg(long = "J", alias = "j")]
        j: Option<String>,
    },
    /// `H\GL_n(F_q)/K` for H, K given as perm, diag or young:λ.
    Gl {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: Option<String>,
    },
    /// Interpolate `q ↦ |GL_λ\GL_n(F_q)/GL_μ|` and check it on held-out q.
    GlConjecture {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        /// Interpolation nodes, taken from the smallest prime powers.
        #[arg(long)]
        points: Option<usize>,
        #[arg(long, default_value_t = 1)]
        held_out: usize,
    },
    /// Polytope datasets.
    Dataset {
        #[command(subcommand)]
        action: DatasetAction,
    },
}

#[derive(Subcommand, Debug)]
enum DatasetAction {
    /// Write the polytope generator files.
    Export {
        /// Target directory; defaults to $DCOSETS_DATASET_DIR, then `.`.
        #[arg(long)]
        dir: Option<PathBuf>,
    },
}

fn dispatch(command: Command) -> Result<Report, CliError> {
    match command {
        Command::Table { name, max, q } => commands::table(name, max, q),
        Command::Symmetric { n, left, right } => commands::symmetric(n, &left, right.as_deref()),
        Command::Typeb { n, i, j } => commands::typeb(n, &i, j.as_deref()),
        Command::Gl { n, q, left, right } => commands::gl(n, q, &left, right.as_deref()),
        Command::GlConjecture {
            n,
            lambda,
            mu,
            points,
            held_out,
        } => commands::gl_conjecture(n, &lambda, &mu, points, held_out),
        Command::Dataset {
            action: DatasetAction::Export { dir },
        } => {
            let dir = dir
                .or_else(|| std::env::var_os(DATASET_DIR_ENV).map(PathBuf::from))
                .unwrap_or_else(|| PathBuf::from("."));
            commands::dataset_export(&dir)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let start = Instant::now();
    let mut report = match dispatch(cli.command) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    if cli.timing {
        let ms = start.elapsed().as_secs_f64() * 1e3;
        eprintln!("{}: {ms:.1} ms", report.command);
        report.timing_ms = Some(ms);
    }
    let mut out = std::io::stdout().lock();
    if let Err(e) = report.write(cli.format, &mut out).and_then(|_| out.flush()) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    ExitCode::SUCCESS
}
