//! `winding-atlas`: simulations, analytic curves and acceptance checks for
//! the areas enclosed by closed planar random paths.

mod analytic;
mod config;
mod error;
mod manifest;
mod simulate;
mod svg;
mod validate;

use clap::{Parser, Subcommand};
use error::CliError;
use std::process::ExitCode;

#[derive(Debug, Parser)]
#[command(name = "winding-atlas", version, about)]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true, env = "WINDING_ATLAS_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Monte Carlo estimates of sector areas for closed lattice walks.
    Simulate(simulate::SimulateArgs),
    /// Area densities and mean-area curves from the analytic formulas.
    Analytic(analytic::AnalyticArgs),
    /// Run the acceptance checks.
    Validate(validate::ValidateArgs),
}

fn run(cli: Cli) -> Result<(), CliError> {
    if let Some(n) = cli.threads {
        if n == 0 {
            return Err(CliError::Usage("--threads must be >= 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Resource(e.to_string()))?;
    }
    match cli.command {
        Command::Simulate(args) => simulate::run(args),
        Command::Analytic(args) => analytic::run(args),
        Command::Validate(args) => validate::run(args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
