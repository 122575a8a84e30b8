//! `bloch-thermo`: heat, work and entropy along trajectories of the driven,
//! dissipative two-level atom.

mod commands;
mod error;
mod output;
mod scenario;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use crate::error::CliError;
use crate::scenario::{Scenario, SweepParam, SweepSpec};

#[derive(Debug, Parser)]
#[command(name = "bloch-thermo", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write the trajectory and all first-law rates as CSV.
    Simulate {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Also write a gnuplot script next to the CSV.
        #[arg(long)]
        plot: bool,
    },
    /// Net variations over [0, t_ss] as one decay rate is varied.
    /// Options left out are taken from the scenario's `sweep` section.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, value_enum)]
        param: Option<SweepParam>,
        #[arg(long)]
        from: Option<f64>,
        #[arg(long)]
        to: Option<f64>,
        #[arg(long)]
        steps: Option<usize>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print the steady state.
    Steady {
        #[arg(long)]
        config: PathBuf,
    },
    /// Run the invariant suite; exits with 2 if any invariant fails.
    Verify {
        #[arg(long)]
        config: Option<PathBuf>,
    },
}

fn sweep_spec(
    base: Option<SweepSpec>,
    param: Option<SweepParam>,
    from: Option<f64>,
    to: Option<f64>,
    steps: Option<usize>,
) -> Result<SweepSpec, CliError> {
    let missing = |name: &str| {
        CliError::Validation(format!("sweep: --{name} not given and not in the scenario"))
    };
    Ok(SweepSpec {
        param: param
            .or(base.map(|b| b.param))
            .ok_or_else(|| missing("param"))?,
        from: from
            .or(base.map(|b| b.from))
            .ok_or_else(|| missing("from"))?,
        to: to.or(base.map(|b| b.to)).ok_or_else(|| missing("to"))?,
        steps: steps
            .or(base.map(|b| b.steps))
            .ok_or_else(|| missing("steps"))?,
    })
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Simulate { config, out, plot } => {
            let scenario = Scenario::load(&config)?;
            let rows = commands::simulate(&scenario, &out, plot)?;
            eprintln!("wrote {rows} rows to {}", out.display());
        }
        Command::Sweep {
            config,
            param,
            from,
            to,
            steps,
            out,
        } => {
            let scenario = Scenario::load(&config)?;
            let spec = sweep_spec(scenario.sweep, param, from, to, steps)?;
            let rows = commands::sweep(&scenario, &spec)?;
            commands::write_sweep(&out, spec.param, &rows)?;
            eprintln!("wrote {} rows to {}", rows.len(), out.display());
        }
        Command::Steady { config } => {
            let scenario = Scenario::load(&config)?;
            commands::steady(&scenario, std::io::stdout().lock())?;
        }
        Command::Verify { config } => {
            let scenario = match config {
                Some(path) => Scenario::load(&path)?,
                None => Scenario::default(),
            };
            let checks = commands::verify(&scenario)?;
            for check in &checks {
                let status = if check.passed { "PASS" } else { "FAIL" };
                println!("{status} {:<40} {}", check.name, check.detail);
            }
            let failed: Vec<&str> = checks
                .iter()
                .filter(|c| !c.passed)
                .map(|c| c.name)
                .collect();
            if !failed.is_empty() {
                return Err(CliError::Invariant(failed.join(", ")));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
