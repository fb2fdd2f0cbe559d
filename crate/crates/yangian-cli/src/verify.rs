//! The `verify` subcommand: run relation-family sweeps, emit the report.

use crate::context_args::{parse_mu, ContextArgs};
use crate::Outcome;
use anyhow::{bail, Context, Result};
use std::path::PathBuf;
use yangian::relations::{full_suite_filtered, RelationConfig, Report};

#[derive(clap::Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub context: ContextArgs,

    /// Block composition of M+N, comma-separated.
    #[arg(long)]
    pub mu: String,

    /// Series truncation order R for series-form families.
    #[arg(long, default_value_t = 3)]
    pub series_order: usize,

    /// Generator level cap for coefficient-form families.
    #[arg(long, default_value_t = 3)]
    pub gen_order: usize,

    /// `all`, or a comma-separated list of family identifiers.
    #[arg(long, default_value = "all")]
    pub families: String,

    /// Write the JSON report here; without it the JSON goes to stdout.
    #[arg(long)]
    pub report: Option<PathBuf>,

    /// Worker threads. Accepted for interface stability; the sweep is
    /// currently sequential (sub-second at contract sizes) and output is
    /// deterministic at any value.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

pub fn run(args: &VerifyArgs) -> Result<Outcome> {
    if args.jobs == 0 {
        bail!("--jobs must be at least 1");
    }
    if args.series_order == 0 || args.gen_order == 0 {
        bail!("--series-order and --gen-order must be at least 1");
    }
    let ctx = args.context.build()?;
    let mu = parse_mu(&args.mu, ctx.size())?;
    let cfg = RelationConfig::new(args.series_order, args.gen_order);

    let only: Option<Vec<String>> = match args.families.trim() {
        "all" => None,
        list => Some(
            list.split(',')
                .map(|s| s.trim().to_string())
                .filter(|s| !s.is_empty())
                .collect(),
        ),
    };
    if let Some(ids) = &only {
        if ids.is_empty() {
            bail!("--families must name at least one family or be `all`");
        }
    }

    let report = full_suite_filtered(&ctx, &mu, &cfg, only.as_deref())
        .context("verification sweep failed")?;

    let json = serde_json::to_string_pretty(&report).context("serializing report")?;
    match &args.report {
        Some(path) => {
            std::fs::write(path, json.as_bytes())
                .with_context(|| format!("writing report to {}", path.display()))?;
            print_summary(&report, &mut std::io::stdout().lock())?;
        }
        None => {
            println!("{json}");
            print_summary(&report, &mut std::io::stderr().lock())?;
        }
    }

    Ok(if report.passed() {
        Outcome::Clean
    } else {
        Outcome::FailuresRecorded
    })
}

fn print_summary(report: &Report, out: &mut dyn std::io::Write) -> Result<()> {
    for family in &report.families {
        if family.failures.is_empty() {
            writeln!(
                out,
                "{:>28}  ok      checked {:>6}  {} ms",
                family.id, family.checked, family.millis
            )?;
        } else {
            writeln!(
                out,
                "{:>28}  FAILED  checked {:>6}  {} failures (first: {})",
                family.id,
                family.checked,
                family.failures.len(),
                family.failures[0].indices
            )?;
        }
    }
    let s = &report.summary;
    writeln!(
        out,
        "{} families, {} instances checked, {} failures — {}",
        s.families_run,
        s.total_checked,
        s.total_failures,
        if s.passed { "PASS" } else { "FAIL" }
    )?;
    Ok(())
}
