//! Shared flags describing the algebra configuration, and their validation.

use anyhow::{bail, Context, Result};
use std::sync::Arc;
use yangian::context::{AlgebraContext, Composition, EngineFault, Sequence01};

#[derive(clap::Args, Debug)]
pub struct ContextArgs {
    /// Field characteristic; must be prime.
    #[arg(long)]
    pub p: u64,

    /// Even|odd dimensions as `M,N`.
    #[arg(long, value_name = "M,N")]
    pub size: String,

    /// Parity sequence: a string of M zeros and N ones in any order.
    #[arg(long)]
    pub sigma: String,
}

impl ContextArgs {
    /// Build the algebra context, honouring the fault-injection hook in
    /// test builds.
    pub fn build(&self) -> Result<Arc<AlgebraContext>> {
        let (m, n) = parse_size(&self.size)?;
        let sigma = Sequence01::parse(&self.sigma)
            .with_context(|| format!("invalid --sigma {:?}", self.sigma))?;
        AlgebraContext::with_fault(self.p, m, n, sigma, engine_fault())
            .context("invalid configuration")
    }
}

fn parse_size(text: &str) -> Result<(usize, usize)> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 2 {
        bail!("--size must be two comma-separated integers `M,N`, got {text:?}");
    }
    let m = parts[0]
        .trim()
        .parse::<usize>()
        .with_context(|| format!("invalid even dimension {:?}", parts[0]))?;
    let n = parts[1]
        .trim()
        .parse::<usize>()
        .with_context(|| format!("invalid odd dimension {:?}", parts[1]))?;
    Ok((m, n))
}

/// Parse a comma-separated composition and check it sums to `total`.
pub fn parse_mu(text: &str, total: usize) -> Result<Composition> {
    let mut parts = Vec::new();
    for piece in text.split(',') {
        let part = piece
            .trim()
            .parse::<usize>()
            .with_context(|| format!("invalid composition part {piece:?} in --mu"))?;
        parts.push(part);
    }
    Composition::new(parts, total).context("invalid --mu")
}

/// Fault injection for exercising the failure path.  Only honoured in
/// builds with debug assertions (tests and dev profiles); release binaries
/// ignore the variable entirely.
fn engine_fault() -> Option<EngineFault> {
    #[cfg(debug_assertions)]
    {
        match std::env::var("YANGIAN_FAULT").as_deref() {
            Ok("drop-term") => return Some(EngineFault::DropBracketTerm),
            Ok("flip-sign") => return Some(EngineFault::FlipBracketSign),
            _ => {}
        }
    }
    None
}
