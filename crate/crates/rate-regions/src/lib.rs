//! Rate regions and bounds for the separated two-way relay channel.
//!
//! Evaluates the cut-set outer bound, the decode-and-forward and
//! hash-and-forward achievable regions, the Shannon two-way inner bound,
//! and the closed-form binary-adder outer bound with its three relay-regime
//! operating points. Regions are computed by deterministic grid search over
//! input distributions followed by Pareto pruning and a time-sharing
//! (upper concave envelope) closure.

mod adder;
mod bounds;
mod grid;
mod hf;
mod region;

pub use adder::{binary_adder_outer, pnc_feasible, regime_alpha, BinaryAdderParams, Regime, RegimePoint};
pub use bounds::{
    cutset_caps, cutset_outer_bound, df_region, dl_rate, shannon_caps, shannon_inner_bound,
    strong_dl_condition, uplink_caps, UplinkCaps,
};
pub use grid::{simplex_pmfs, GridSpec, HfGridSpec};
pub use hf::{bc_refinement_rates, hf_region, DlRefinementRates, RefinementFrontier};
pub use region::{RatePoint, RateRegion, Scheme};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RegionError {
    #[error("empty distribution grid (steps must be at least 1)")]
    EmptyGrid,
    #[error("crossover probability {0} outside [0, 0.5]")]
    EpsOutOfRange(f64),
    #[error("alpha {0} outside [0, 1]")]
    AlphaOutOfRange(f64),
    #[error("rate point requires r12 >= r21 (got {r12}, {r21})")]
    RatesUnordered { r12: f64, r21: f64 },
    #[error(transparent)]
    Info(#[from] info_core::InfoError),
}

pub type Result<T> = std::result::Result<T, RegionError>;
