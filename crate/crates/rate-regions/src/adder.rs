use std::fmt;

use info_core::binary_entropy;
use serde::{Deserialize, Serialize};

use crate::region::RatePoint;
use crate::{RegionError, Result};

/// Numeric slack allowed on boundary operating points.
const BOUNDARY_TOL: f64 = 1e-9;

/// Crossover probabilities of the noisy binary adder channel: uplink noise
/// `eps_r` and downlink noise `eps_1`, `eps_2` toward nodes 1 and 2.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BinaryAdderParams {
    pub eps_r: f64,
    pub eps_1: f64,
    pub eps_2: f64,
}

impl BinaryAdderParams {
    pub fn new(eps_r: f64, eps_1: f64, eps_2: f64) -> Result<Self> {
        for e in [eps_r, eps_1, eps_2] {
            if !(0.0..=0.5).contains(&e) {
                return Err(RegionError::EpsOutOfRange(e));
            }
        }
        Ok(Self {
            eps_r,
            eps_1,
            eps_2,
        })
    }

    /// Same channel with the two nodes relabeled.
    pub fn swapped(&self) -> Self {
        Self {
            eps_r: self.eps_r,
            eps_1: self.eps_2,
            eps_2: self.eps_1,
        }
    }
}

/// Closed-form outer bound for the noisy binary adder channel:
/// `r12 = min{1 - H(eps_r), 1 - H(eps_2)}`,
/// `r21 = min{1 - H(eps_r), 1 - H(eps_1)}`
/// (Eq. 1 evaluated at uniform inputs, where it is tight).
pub fn binary_adder_outer(p: &BinaryAdderParams) -> RatePoint {
    let cr = 1.0 - binary_entropy(p.eps_r).expect("eps in range");
    let c1 = 1.0 - binary_entropy(p.eps_1).expect("eps in range");
    let c2 = 1.0 - binary_entropy(p.eps_2).expect("eps in range");
    RatePoint::new(cr.min(c2), cr.min(c1))
}

/// Relay-strength classification of a channel parameter triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    Strong,
    Medium,
    Weak,
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Regime::Strong => f.write_str("strong"),
            Regime::Medium => f.write_str("medium"),
            Regime::Weak => f.write_str("weak"),
        }
    }
}

/// The time-sharing operating point for a given channel: the regime, the
/// optimal common-codebook fraction `alpha`, and the achieved rates, which
/// lie on the closed-form outer boundary.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RegimePoint {
    pub regime: Regime,
    pub alpha: f64,
    pub rates: RatePoint,
    /// True when the classification required relabeling the nodes
    /// (the convention keeps the larger downlink noise on node 1);
    /// `rates` are already mapped back to the original labeling.
    pub relabeled: bool,
}

/// Classify the relay regime and return the capacity-achieving time-share.
///
/// Strong relay (`eps_r >= max(eps_1, eps_2)`): `alpha = 1`, both users at
/// `1 - H(eps_r)`. Medium (`eps_1 >= eps_r >= eps_2`):
/// `alpha = (1 - H(eps_1)) / (1 - H(eps_r))`. Weak (`eps_1 >= eps_2 >= eps_r`):
/// `alpha = (1 - H(eps_1)) / (1 - H(eps_2))`. Orderings with `eps_2 > eps_1`
/// are handled by relabeling the nodes and mapping the result back.
pub fn regime_alpha(p: &BinaryAdderParams) -> RegimePoint {
    if p.eps_2 > p.eps_1 {
        let inner = regime_alpha_ordered(&p.swapped());
        return RegimePoint {
            rates: RatePoint::new(inner.rates.r21, inner.rates.r12),
            relabeled: true,
            ..inner
        };
    }
    regime_alpha_ordered(p)
}

// requires eps_1 >= eps_2
fn regime_alpha_ordered(p: &BinaryAdderParams) -> RegimePoint {
    let h = |e: f64| binary_entropy(e).expect("eps in range");
    let cr = 1.0 - h(p.eps_r);
    let c1 = 1.0 - h(p.eps_1);
    let c2 = 1.0 - h(p.eps_2);
    let ratio = |num: f64, den: f64| if den <= 0.0 { 1.0 } else { (num / den).min(1.0) };
    if p.eps_r >= p.eps_1 {
        RegimePoint {
            regime: Regime::Strong,
            alpha: 1.0,
            rates: RatePoint::new(cr, cr),
            relabeled: false,
        }
    } else if p.eps_r >= p.eps_2 {
        RegimePoint {
            regime: Regime::Medium,
            alpha: ratio(c1, cr),
            rates: RatePoint::new(cr, c1),
            relabeled: false,
        }
    } else {
        RegimePoint {
            regime: Regime::Weak,
            alpha: ratio(c1, c2),
            rates: RatePoint::new(c2, c1),
            relabeled: false,
        }
    }
}

/// Check the four finite-rate conditions of the time-shared PNC scheme with
/// slack at least `margin`:
/// `r12 - r21 <= (1 - alpha)(1 - H(eps_r))`,
/// `r21 <= alpha (1 - H(eps_r))`,
/// `r21 <= 1 - H(eps_1)` and `r12 <= 1 - H(eps_2)`.
///
/// Requires `r12 >= r21`; callers with the opposite ordering relabel first.
pub fn pnc_feasible(
    alpha: f64,
    rates: &RatePoint,
    p: &BinaryAdderParams,
    margin: f64,
) -> Result<bool> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(RegionError::AlphaOutOfRange(alpha));
    }
    if rates.r12 < rates.r21 {
        return Err(RegionError::RatesUnordered {
            r12: rates.r12,
            r21: rates.r21,
        });
    }
    let h = |e: f64| binary_entropy(e).expect("eps in range");
    let cr = 1.0 - h(p.eps_r);
    let slacks = [
        (1.0 - alpha) * cr - (rates.r12 - rates.r21),
        alpha * cr - rates.r21,
        (1.0 - h(p.eps_1)) - rates.r21,
        (1.0 - h(p.eps_2)) - rates.r12,
    ];
    Ok(slacks.iter().all(|&s| s >= margin - BOUNDARY_TOL))
}
