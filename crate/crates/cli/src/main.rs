//! `algebroid` command-line tool.

mod commands;
mod output;
mod suite;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use crate::output::{CliError, EXIT_USAGE};

#[derive(Debug, Parser)]
#[command(
    name = "algebroid",
    version,
    about = "Exact cohomology of Lie algebras and Lie algebroids"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Lie algebra cohomology.
    #[command(subcommand)]
    Lie(LieCommand),
    /// Circle algebroids.
    #[command(subcommand)]
    Circle(CircleCommand),
    /// Compare a product's Betti numbers with the convolution of its factors'.
    Kunneth {
        a: PathBuf,
        b: PathBuf,
        /// Representation of the first factor (algebra files only).
        #[arg(long)]
        rep_a: Option<PathBuf>,
        /// Representation of the second factor (algebra files only).
        #[arg(long)]
        rep_b: Option<PathBuf>,
        #[arg(long)]
        n_min: Option<usize>,
        #[arg(long)]
        n_max: Option<usize>,
    },
    /// Hopf structure induced by addition on an abelian algebra.
    Hopf { file: PathBuf },
    /// Exactness of the symbol complex of a fiber at a covector.
    Symbol {
        file: PathBuf,
        /// Comma-separated rationals, e.g. `1,-1/2`.
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
    },
    /// Run the built-in catalog of checks.
    Catalog,
}

#[derive(Debug, Subcommand)]
enum LieCommand {
    /// Betti numbers and Euler characteristic.
    Cohomology {
        file: PathBuf,
        #[arg(long)]
        rep: Option<PathBuf>,
    },
    /// Euler characteristic only.
    Euler { file: PathBuf },
}

#[derive(Debug, Subcommand)]
enum CircleCommand {
    /// Betti numbers over a range of truncation windows.
    Sweep {
        file: PathBuf,
        #[arg(long)]
        n_min: Option<usize>,
        #[arg(long)]
        n_max: Option<usize>,
    },
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(value) = std::env::var("ALGEBROID_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| {
            CliError::usage(format!(
                "ALGEBROID_THREADS must be a positive integer, got `{value}`"
            ))
        })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::usage(e.to_string()))
}

fn run(cli: Cli) -> Result<output::Report, CliError> {
    configure_threads()?;
    match cli.command {
        Command::Lie(LieCommand::Cohomology { file, rep }) => {
            commands::lie_cohomology(&file, rep.as_deref())
        }
        Command::Lie(LieCommand::Euler { file }) => commands::lie_euler(&file),
        Command::Circle(CircleCommand::Sweep { file, n_min, n_max }) => {
            commands::circle_sweep(&file, n_min, n_max)
        }
        Command::Kunneth {
            a,
            b,
            rep_a,
            rep_b,
            n_min,
            n_max,
        } => commands::kunneth(&a, &b, rep_a.as_deref(), rep_b.as_deref(), n_min, n_max),
        Command::Hopf { file } => commands::hopf(&file),
        Command::Symbol { file, alpha } => commands::symbol(&file, &alpha),
        Command::Catalog => Ok(suite::run()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(report) => {
            print!("{}", report.render());
            ExitCode::from(report.code)
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
