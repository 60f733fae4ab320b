use std::path::PathBuf;

use clap::{Args, ValueEnum};
use info_core::Kernel;
use rate_regions::{
    binary_adder_outer, cutset_outer_bound, df_region, hf_region, regime_alpha,
    shannon_inner_bound, BinaryAdderParams, GridSpec, HfGridSpec, RateRegion, Scheme,
};
use serde::Deserialize;

use crate::error::{CliError, Result};
use crate::manifest;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RegionScheme {
    Outer,
    Df,
    Hf,
    Shannon,
    AdderOuter,
    Regime,
}

#[derive(Debug, Args)]
pub struct RegionArgs {
    /// Which bound or achievable region to compute
    #[arg(long, value_enum)]
    pub scheme: RegionScheme,
    /// Uplink crossover probability
    #[arg(long)]
    pub eps_r: Option<f64>,
    /// Downlink crossover probability towards node 1
    #[arg(long)]
    pub eps_1: Option<f64>,
    /// Downlink crossover probability towards node 2
    #[arg(long)]
    pub eps_2: Option<f64>,
    /// JSON file with explicit uplink/downlink kernels instead of eps flags
    #[arg(long, conflicts_with_all = ["eps_r", "eps_1", "eps_2"])]
    pub kernel_file: Option<PathBuf>,
    /// Input-distribution grid resolution
    #[arg(long, default_value_t = 64)]
    pub grid_steps: usize,
    /// Auxiliary-variable grid resolution for the hf scheme
    #[arg(long, default_value_t = 4)]
    pub u_steps: usize,
    /// Output CSV path; stdout when absent
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Deserialize)]
struct KernelSpec {
    inputs: Vec<usize>,
    output: usize,
    rows: Vec<Vec<f64>>,
}

#[derive(Debug, Deserialize)]
struct KernelFile {
    uplink: KernelSpec,
    dl1: KernelSpec,
    dl2: KernelSpec,
}

fn kernel_from(spec: &KernelSpec) -> Result<Kernel> {
    Ok(Kernel::new(
        spec.inputs.clone(),
        spec.output,
        spec.rows.clone(),
    )?)
}

fn eps_triple(args: &RegionArgs) -> Result<(f64, f64, f64)> {
    match (args.eps_r, args.eps_1, args.eps_2) {
        (Some(r), Some(e1), Some(e2)) => Ok((r, e1, e2)),
        _ => Err(CliError::Usage(
            "this scheme needs --eps-r, --eps-1 and --eps-2 (or --kernel-file)".into(),
        )),
    }
}

fn channels(args: &RegionArgs) -> Result<(Kernel, Kernel, Kernel, serde_json::Value)> {
    if let Some(path) = &args.kernel_file {
        let body = std::fs::read_to_string(path)?;
        let file: KernelFile = serde_json::from_str(&body)
            .map_err(|e| CliError::Usage(format!("kernel file: {e}")))?;
        let cfg = serde_json::json!({ "kernel_file": path.display().to_string() });
        return Ok((
            kernel_from(&file.uplink)?,
            kernel_from(&file.dl1)?,
            kernel_from(&file.dl2)?,
            cfg,
        ));
    }
    let (r, e1, e2) = eps_triple(args)?;
    // validated range for the binary adder model
    BinaryAdderParams::new(r, e1, e2)?;
    let cfg = serde_json::json!({ "eps_r": r, "eps_1": e1, "eps_2": e2 });
    Ok((
        Kernel::binary_adder(r)?,
        Kernel::bsc(e1)?,
        Kernel::bsc(e2)?,
        cfg,
    ))
}

pub fn run(args: &RegionArgs, argv: Vec<String>) -> Result<()> {
    let (region, config) = match args.scheme {
        RegionScheme::AdderOuter => {
            let (r, e1, e2) = eps_triple(args)?;
            let params = BinaryAdderParams::new(r, e1, e2)?;
            let pt = binary_adder_outer(&params);
            let param_json =
                format!("{{\"eps_r\":{r},\"eps_1\":{e1},\"eps_2\":{e2}}}");
            (
                RateRegion::from_points(Scheme::AdderOuter, vec![pt], param_json),
                serde_json::json!({ "eps_r": r, "eps_1": e1, "eps_2": e2 }),
            )
        }
        RegionScheme::Regime => {
            let (r, e1, e2) = eps_triple(args)?;
            let params = BinaryAdderParams::new(r, e1, e2)?;
            let point = regime_alpha(&params);
            let param_json = format!(
                "{{\"regime\":\"{}\",\"alpha\":{},\"relabeled\":{},\"eps_r\":{r},\"eps_1\":{e1},\"eps_2\":{e2}}}",
                point.regime, point.alpha, point.relabeled
            );
            (
                RateRegion::from_points(Scheme::Regime, vec![point.rates], param_json),
                serde_json::json!({
                    "eps_r": r, "eps_1": e1, "eps_2": e2,
                    "regime": point.regime.to_string(), "alpha": point.alpha,
                }),
            )
        }
        RegionScheme::Outer | RegionScheme::Df | RegionScheme::Shannon => {
            let (uplink, dl1, dl2, cfg) = channels(args)?;
            let grid = GridSpec::new(args.grid_steps);
            let region = match args.scheme {
                RegionScheme::Outer => cutset_outer_bound(&uplink, &dl1, &dl2, &grid)?,
                RegionScheme::Df => df_region(&uplink, &dl1, &dl2, &grid)?,
                _ => shannon_inner_bound(&uplink, &grid)?,
            };
            (region, cfg)
        }
        RegionScheme::Hf => {
            let (uplink, dl1, dl2, cfg) = channels(args)?;
            let spec = HfGridSpec::new(args.grid_steps, args.u_steps);
            (hf_region(&uplink, &dl1, &dl2, &spec)?, cfg)
        }
    };

    let mut buf = Vec::new();
    region
        .write_csv(&mut buf)
        .map_err(|e| CliError::Io(e.to_string()))?;
    match &args.out {
        Some(path) => manifest::write_with_manifest(path, &buf, argv, config, None),
        None => {
            use std::io::Write;
            std::io::stdout().write_all(&buf)?;
            Ok(())
        }
    }
}
