//! `yangian`: command-line front end.
//!
//! Every command except `validate` reads one JSON document from stdin and
//! writes one to stdout.  Exit status: 0 success, 1 malformed input or domain
//! error, 2 validation mismatch, 3 dimension cap exceeded.

mod commands;
mod wire;

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde_json::Value;

use yangian_core::irreducibility::{GridSpec, DEFAULT_CAP};

#[derive(Parser)]
#[command(name = "yangian", version, about = "Irreducibility of tensor products of Yangian evaluation modules")]
struct Cli {
    /// Largest module dimension the oracle will build.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// Worker threads for `validate` (default: available parallelism).
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the combinatorial criterion.
    Criterion,
    /// Decide irreducibility by direct computation.
    Oracle,
    /// Build a reducibility witness for a pair of factors.
    Witness,
    /// Cross-validate criterion and oracle over a grid.
    Validate {
        /// Grid specification (JSON).
        grid: PathBuf,
        /// Report destination; stdout when absent.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Gelfand–Tsetlin basis and generator matrices of a gl_n module.
    GtInfo,
    /// Apply a Yangian operator to a vector.
    Act,
}

enum Failure {
    Input(anyhow::Error),
    Cap(yangian_core::Error),
    Mismatch,
}

impl From<yangian_core::Error> for Failure {
    fn from(e: yangian_core::Error) -> Self {
        match e {
            yangian_core::Error::CapExceeded { .. } => Failure::Cap(e),
            other => Failure::Input(other.into()),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Input(e)
    }
}

fn read_stdin<T: DeserializeOwned>() -> anyhow::Result<T> {
    let mut buf = String::new();
    std::io::stdin().read_to_string(&mut buf).context("reading stdin")?;
    serde_json::from_str(&buf).context("malformed input")
}

/// Writes one JSON line; a closed stdout is not an error.
fn emit(v: &Value) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{}", serde_json::to_string(v).expect("JSON values serialize"));
}

fn run(cli: Cli) -> Result<(), Failure> {
    let cap = cli.cap;
    match cli.command {
        Command::Criterion => emit(&commands::criterion(&read_stdin()?)?),
        Command::Oracle => emit(&commands::oracle(&read_stdin()?, cap)?),
        Command::Witness => emit(&commands::witness(&read_stdin()?, cap)?),
        Command::GtInfo => emit(&commands::gt_info(&read_stdin()?, cap)?),
        Command::Act => emit(&commands::act(&read_stdin()?, cap)?),
        Command::Validate { grid, output } => {
            let text = std::fs::read_to_string(&grid).with_context(|| format!("reading {}", grid.display()))?;
            let spec: GridSpec = serde_json::from_str(&text).context("malformed grid spec")?;
            let report = commands::validate(&spec, cap, cli.workers)?;
            let body = serde_json::to_string_pretty(&report).expect("report serializes");
            match output {
                Some(path) => {
                    std::fs::write(&path, body).with_context(|| format!("writing {}", path.display()))?;
                    emit(&serde_json::to_value(&report.summary).expect("summary serializes"));
                }
                None => {
                    let _ = writeln!(std::io::stdout().lock(), "{body}");
                }
            }
            if !report.success() {
                return Err(Failure::Mismatch);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    // clap's own usage-error status would collide with the mismatch code
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Mismatch) => {
            eprintln!("error: criterion and oracle disagree; see the report");
            ExitCode::from(2)
        }
        Err(Failure::Cap(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}
