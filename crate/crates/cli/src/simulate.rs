use std::path::PathBuf;

use clap::Args;
use rate_regions::{binary_adder_outer, regime_alpha, BinaryAdderParams, RatePoint};
use twr_sim::{monte_carlo, ProtocolConfig, SimReport, SimScheme};

use crate::error::{CliError, Result};
use crate::manifest;

#[derive(Debug, Args)]
pub struct SimulateArgs {
    /// Relaying scheme to simulate
    #[arg(long)]
    pub scheme: String,
    /// Block length
    #[arg(long, default_value_t = 16)]
    pub n: usize,
    /// Time-share fraction for the common codebook phase
    #[arg(long, conflicts_with = "auto_regime")]
    pub alpha: Option<f64>,
    /// Derive alpha and operating rates from the relay-regime formula
    #[arg(long, default_value_t = false)]
    pub auto_regime: bool,
    /// Operating rates as a fraction of the regime (or outer-bound) rates
    #[arg(long, default_value_t = 1.0)]
    pub rate_frac: f64,
    #[arg(long)]
    pub eps_r: f64,
    #[arg(long)]
    pub eps_1: f64,
    #[arg(long)]
    pub eps_2: f64,
    #[arg(long, default_value_t = 1000)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Typicality slack for hash-and-forward list decoding
    #[arg(long, default_value_t = 0.12)]
    pub eps_typ: f64,
    /// Explicit operating rates, bypassing --rate-frac (format: r12,r21)
    #[arg(long)]
    pub rates: Option<String>,
    /// Output JSON path; stdout when absent
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub struct ResolvedSim {
    pub cfg: ProtocolConfig,
    pub scheme: SimScheme,
    pub regime: Option<String>,
    /// True when node roles were swapped so that r12 >= r21 internally.
    pub swapped: bool,
}

fn parse_rates(spec: &str) -> Result<RatePoint> {
    let parts: Vec<&str> = spec.split(',').collect();
    if parts.len() != 2 {
        return Err(CliError::Usage(format!(
            "--rates expects 'r12,r21', got '{spec}'"
        )));
    }
    let r12: f64 = parts[0]
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("bad rate '{}'", parts[0])))?;
    let r21: f64 = parts[1]
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("bad rate '{}'", parts[1])))?;
    Ok(RatePoint::new(r12, r21))
}

/// Turns the flag set into a runnable config. The index algebra assumes
/// `b12 >= b21`; when the requested rates order the other way the channel
/// and rates are relabeled here and the per-node counts are swapped back
/// after the run.
pub fn resolve(args: &SimulateArgs) -> Result<ResolvedSim> {
    let scheme: SimScheme = args.scheme.parse()?;
    let channel = BinaryAdderParams::new(args.eps_r, args.eps_1, args.eps_2)?;
    if args.rate_frac <= 0.0 {
        return Err(CliError::Usage(format!(
            "--rate-frac must be positive, got {}",
            args.rate_frac
        )));
    }

    let (alpha, base, regime) = if args.auto_regime {
        let point = regime_alpha(&channel);
        (point.alpha, point.rates, Some(point.regime.to_string()))
    } else {
        let alpha = args.alpha.ok_or_else(|| {
            CliError::Usage("provide --alpha or --auto-regime".into())
        })?;
        (alpha, binary_adder_outer(&channel), None)
    };

    let rates = match &args.rates {
        Some(spec) => parse_rates(spec)?,
        None => RatePoint::new(args.rate_frac * base.r12, args.rate_frac * base.r21),
    };

    let (channel, rates, swapped) = if rates.r21 > rates.r12 {
        (
            channel.swapped(),
            RatePoint::new(rates.r21, rates.r12),
            true,
        )
    } else {
        (channel, rates, false)
    };

    Ok(ResolvedSim {
        cfg: ProtocolConfig {
            n: args.n,
            alpha,
            rates,
            channel,
            seed: args.seed,
            trials: args.trials,
            eps_typ: args.eps_typ,
            hash_budget: None,
        },
        scheme,
        regime,
        swapped,
    })
}

/// Runs the experiment and maps a relabeled run back to the caller's node
/// numbering.
pub fn run_report(resolved: &ResolvedSim) -> Result<SimReport> {
    let mut report = monte_carlo(&resolved.cfg, resolved.scheme)?;
    if resolved.swapped {
        std::mem::swap(&mut report.errors_node1, &mut report.errors_node2);
        std::mem::swap(&mut report.bler_node1, &mut report.bler_node2);
        std::mem::swap(&mut report.r12_bits, &mut report.r21_bits);
        std::mem::swap(&mut report.eps_1, &mut report.eps_2);
    }
    Ok(report)
}

pub fn run(args: &SimulateArgs, argv: Vec<String>) -> Result<()> {
    let resolved = resolve(args)?;
    let report = run_report(&resolved)?;
    let body = serde_json::to_vec_pretty(&report)
        .map_err(|e| CliError::Usage(format!("report serialization: {e}")))?;

    let mut config = serde_json::to_value(&resolved.cfg)
        .map_err(|e| CliError::Usage(format!("config serialization: {e}")))?;
    if let Some(regime) = &resolved.regime {
        config["regime"] = serde_json::Value::String(regime.clone());
    }
    config["scheme"] = serde_json::Value::String(resolved.scheme.to_string());

    match &args.out {
        Some(path) => {
            manifest::write_with_manifest(path, &body, argv, config, Some(args.seed))
        }
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout();
            stdout.write_all(&body)?;
            writeln!(stdout)?;
            Ok(())
        }
    }
}
