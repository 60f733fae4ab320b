use std::fmt::Write as _;

use clap::Args;

use crate::error::{CliError, Result};
use crate::manifest;
use crate::simulate::{resolve, run_report, SimulateArgs};

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Swept variable: `n=8,12,16,20` or `rate-frac=0.6:1.4:0.1`
    #[arg(long)]
    pub sweep: String,
    /// Base simulation flags; `--out` names the sweep CSV
    #[command(flatten)]
    pub base: SimulateArgs,
}

#[derive(Debug, PartialEq)]
enum SweepVar {
    N(Vec<usize>),
    RateFrac(Vec<f64>),
}

fn parse_f64(s: &str) -> Result<f64> {
    s.trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("bad sweep value '{s}'")))
}

fn parse_values(spec: &str) -> Result<Vec<f64>> {
    let values = if spec.contains(':') {
        let parts: Vec<&str> = spec.split(':').collect();
        if parts.len() != 3 {
            return Err(CliError::Usage(format!(
                "range sweep expects start:end:step, got '{spec}'"
            )));
        }
        let (start, end, step) = (
            parse_f64(parts[0])?,
            parse_f64(parts[1])?,
            parse_f64(parts[2])?,
        );
        if step <= 0.0 {
            return Err(CliError::Usage("sweep step must be positive".into()));
        }
        let mut values = Vec::new();
        let mut k = 0u32;
        loop {
            let v = start + f64::from(k) * step;
            if v > end + 1e-9 {
                break;
            }
            values.push(v);
            k += 1;
        }
        values
    } else {
        spec.split(',')
            .filter(|s| !s.trim().is_empty())
            .map(parse_f64)
            .collect::<Result<Vec<f64>>>()?
    };
    if values.is_empty() {
        return Err(CliError::Usage(format!("empty sweep list '{spec}'")));
    }
    Ok(values)
}

fn parse_sweep(spec: &str) -> Result<SweepVar> {
    let (name, rest) = spec
        .split_once('=')
        .ok_or_else(|| CliError::Usage(format!("sweep spec '{spec}' lacks '='")))?;
    let values = parse_values(rest)?;
    match name.trim() {
        "n" => {
            let ns = values
                .iter()
                .map(|&v| {
                    if v.fract() == 0.0 && v >= 1.0 {
                        Ok(v as usize)
                    } else {
                        Err(CliError::Usage(format!("bad block length {v}")))
                    }
                })
                .collect::<Result<Vec<usize>>>()?;
            Ok(SweepVar::N(ns))
        }
        "rate-frac" => Ok(SweepVar::RateFrac(values)),
        other => Err(CliError::Usage(format!(
            "unknown sweep variable '{other}' (supported: n, rate-frac)"
        ))),
    }
}

pub fn run(args: &SweepArgs, argv: Vec<String>) -> Result<()> {
    let var = parse_sweep(&args.sweep)?;
    let mut csv = String::from(
        "scheme,n,alpha,r12_bits,r21_bits,eps_r,eps_1,eps_2,seed,trials,\
         errors_relay,errors_node1,errors_node2,bler_node1,bler_node2,rng_name,elapsed_s\n",
    );

    let points: Vec<(Option<usize>, Option<f64>)> = match &var {
        SweepVar::N(ns) => ns.iter().map(|&n| (Some(n), None)).collect(),
        SweepVar::RateFrac(fs) => fs.iter().map(|&f| (None, Some(f))).collect(),
    };

    for (n, frac) in points {
        let mut base = clone_args(&args.base);
        if let Some(n) = n {
            base.n = n;
        }
        if let Some(frac) = frac {
            base.rate_frac = frac;
        }
        let resolved = resolve(&base)?;
        let r = run_report(&resolved)?;
        writeln!(
            csv,
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            r.scheme,
            r.n,
            r.alpha,
            r.r12_bits,
            r.r21_bits,
            r.eps_r,
            r.eps_1,
            r.eps_2,
            r.seed,
            r.trials,
            r.errors_relay,
            r.errors_node1,
            r.errors_node2,
            r.bler_node1,
            r.bler_node2,
            r.rng_name,
            r.elapsed_s
        )
        .expect("string write");
    }

    let config = serde_json::json!({
        "sweep": args.sweep,
        "scheme": args.base.scheme,
        "eps_r": args.base.eps_r,
        "eps_1": args.base.eps_1,
        "eps_2": args.base.eps_2,
        "trials": args.base.trials,
        "rate_frac": args.base.rate_frac,
    });
    match &args.base.out {
        Some(path) => manifest::write_with_manifest(
            path,
            csv.as_bytes(),
            argv,
            config,
            Some(args.base.seed),
        ),
        None => {
            use std::io::Write;
            std::io::stdout().write_all(csv.as_bytes())?;
            Ok(())
        }
    }
}

fn clone_args(a: &SimulateArgs) -> SimulateArgs {
    SimulateArgs {
        scheme: a.scheme.clone(),
        n: a.n,
        alpha: a.alpha,
        auto_regime: a.auto_regime,
        rate_frac: a.rate_frac,
        eps_r: a.eps_r,
        eps_1: a.eps_1,
        eps_2: a.eps_2,
        trials: a.trials,
        seed: a.seed,
        eps_typ: a.eps_typ,
        rates: a.rates.clone(),
        out: a.out.clone(),
    }
}
