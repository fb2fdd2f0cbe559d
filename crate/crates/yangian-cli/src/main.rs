//! Command-line front end: verification sweeps, expression evaluation, and
//! Gauss-decomposition dumps for the modular super Yangian engine.
//!
//! Exit codes: 0 — success (all checks passed), 1 — at least one relation
//! failure was recorded, 2 — usage or configuration error.

mod context_args;
mod eval;
mod gauss_dump;
mod verify;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "yangian",
    version,
    about = "Exact modular super Yangian toolkit: verify relation families, \
             evaluate expressions, dump Gauss decompositions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify relation families and write a machine-readable report.
    Verify(verify::VerifyArgs),
    /// Evaluate an expression and print its normal form.
    Eval(eval::EvalArgs),
    /// Dump Gauss-decomposition block coefficients, one line per entry.
    Gauss(gauss_dump::GaussArgs),
}

/// What a successfully executed subcommand reports back.
enum Outcome {
    /// Everything requested was computed and no check failed.
    Clean,
    /// The run completed but recorded at least one relation failure.
    FailuresRecorded,
}

fn main() {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify(args) => verify::run(&args),
        Command::Eval(args) => eval::run(&args),
        Command::Gauss(args) => gauss_dump::run(&args),
    };
    let code = match result {
        Ok(Outcome::Clean) => 0,
        Ok(Outcome::FailuresRecorded) => 1,
        Err(err) => {
            eprintln!("error: {err:#}");
            2
        }
    };
    std::process::exit(code);
}
