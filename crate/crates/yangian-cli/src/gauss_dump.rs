//! The `gauss` subcommand: dump the block decomposition coefficients.
//!
//! One line per matrix entry, formatted `block a b | i j r | element-text`.
//! Diagonal blocks come as `block a a`, upper blocks as `block a b` (a < b),
//! lower blocks as `block b a`.  Levels are emitted outermost, so a dump at
//! a smaller truncation order is a prefix of a dump at a larger one.

use crate::context_args::{parse_mu, ContextArgs};
use crate::Outcome;
use anyhow::{bail, Context, Result};
use yangian::gauss::gauss_decompose;
use yangian::series::Var;

#[derive(clap::Args, Debug)]
pub struct GaussArgs {
    #[command(flatten)]
    pub context: ContextArgs,

    /// Block composition of M+N, comma-separated.
    #[arg(long)]
    pub mu: String,

    /// Truncation order R; levels 1..=R are dumped.
    #[arg(long, default_value_t = 2)]
    pub series_order: usize,
}

pub fn run(args: &GaussArgs) -> Result<Outcome> {
    if args.series_order == 0 {
        bail!("--series-order must be at least 1");
    }
    let ctx = args.context.build()?;
    let mu = parse_mu(&args.mu, ctx.size())?;
    let g = gauss_decompose(&ctx, &mu, Var::U, args.series_order)
        .context("Gauss decomposition failed")?;

    let n = mu.n();
    let mut out = String::new();
    for r in 1..=args.series_order {
        for a in 1..=n {
            for i in 1..=mu.part(a) {
                for j in 1..=mu.part(a) {
                    line(&mut out, a, a, i, j, r, &g.d_elem(a, i, j, r).to_text());
                }
            }
        }
        for a in 1..n {
            for b in (a + 1)..=n {
                for i in 1..=mu.part(a) {
                    for j in 1..=mu.part(b) {
                        line(&mut out, a, b, i, j, r, &g.e_elem(a, b, i, j, r).to_text());
                    }
                }
            }
        }
        for a in 1..n {
            for b in (a + 1)..=n {
                for i in 1..=mu.part(b) {
                    for j in 1..=mu.part(a) {
                        line(&mut out, b, a, i, j, r, &g.f_elem(b, a, i, j, r).to_text());
                    }
                }
            }
        }
    }
    print!("{out}");
    Ok(Outcome::Clean)
}

fn line(out: &mut String, a: usize, b: usize, i: usize, j: usize, r: usize, text: &str) {
    use std::fmt::Write;
    let _ = writeln!(out, "block {a} {b} | {i} {j} {r} | {text}");
}
