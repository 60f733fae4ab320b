use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::protocol::{ProtocolConfig, Session, SimScheme};
use crate::rng::RNG_NAME;
use crate::Result;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Aggregated outcome of a Monte Carlo run. Identical configurations yield
/// identical reports except for `elapsed_s`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimReport {
    pub scheme: SimScheme,
    pub n: usize,
    pub alpha: f64,
    pub r12_bits: u32,
    pub r21_bits: u32,
    pub eps_r: f64,
    pub eps_1: f64,
    pub eps_2: f64,
    pub seed: u64,
    pub trials: u64,
    pub errors_relay: u64,
    pub errors_node1: u64,
    pub errors_node2: u64,
    pub bler_node1: f64,
    pub bler_node2: f64,
    pub rng_name: String,
    pub elapsed_s: f64,
}

#[cfg(feature = "parallel")]
fn run_trials(session: &Session, scheme: SimScheme, trials: u64) -> Result<(u64, u64, u64)> {
    (0..trials)
        .into_par_iter()
        .map(|trial| {
            let out = session.round(scheme, trial)?;
            Ok((
                u64::from(!out.relay_ok),
                u64::from(!out.node1_ok),
                u64::from(!out.node2_ok),
            ))
        })
        .try_reduce(|| (0, 0, 0), |a, b| Ok((a.0 + b.0, a.1 + b.1, a.2 + b.2)))
}

#[cfg(not(feature = "parallel"))]
fn run_trials(session: &Session, scheme: SimScheme, trials: u64) -> Result<(u64, u64, u64)> {
    let mut acc = (0, 0, 0);
    for trial in 0..trials {
        let out = session.round(scheme, trial)?;
        acc.0 += u64::from(!out.relay_ok);
        acc.1 += u64::from(!out.node1_ok);
        acc.2 += u64::from(!out.node2_ok);
    }
    Ok(acc)
}

/// Runs `cfg.trials` independent rounds of the given scheme with per-trial
/// RNG streams and aggregates the error counts. Deterministic in everything
/// but wall-clock time, independent of thread count.
pub fn monte_carlo(cfg: &ProtocolConfig, scheme: SimScheme) -> Result<SimReport> {
    let start = Instant::now();
    let session = Session::new(cfg)?;
    let (errors_relay, errors_node1, errors_node2) = run_trials(&session, scheme, cfg.trials)?;
    Ok(SimReport {
        scheme,
        n: cfg.n,
        alpha: cfg.alpha,
        r12_bits: cfg.b12(),
        r21_bits: cfg.b21(),
        eps_r: cfg.channel.eps_r,
        eps_1: cfg.channel.eps_1,
        eps_2: cfg.channel.eps_2,
        seed: cfg.seed,
        trials: cfg.trials,
        errors_relay,
        errors_node1,
        errors_node2,
        bler_node1: errors_node1 as f64 / cfg.trials as f64,
        bler_node2: errors_node2 as f64 / cfg.trials as f64,
        rng_name: RNG_NAME.to_string(),
        elapsed_s: start.elapsed().as_secs_f64(),
    })
}
