use info_core::{
    conditional_mutual_information, mutual_information, JointPmf, Kernel, Pmf,
};

use crate::bounds::{map_items, uplink_caps, UplinkCaps};
use crate::grid::{simplex_pmfs, HfGridSpec};
use crate::region::{RatePoint, RateRegion, Scheme};
use crate::{RegionError, Result};

/// Downlink refinement rates for the degraded broadcast phase:
/// `rr2 = I(U;Y2)` is the coarse layer both receivers decode and
/// `rr1 = rr2 + I(X_R;Y1|U)` adds the fine layer for receiver 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DlRefinementRates {
    pub rr1: f64,
    pub rr2: f64,
}

fn refinement_joint(
    pu: &Pmf,
    pxr_given_u: &Kernel,
    dl1: &Kernel,
    dl2: &Kernel,
) -> Result<JointPmf> {
    if pxr_given_u.arity() != 1 || pxr_given_u.input_sizes()[0] != pu.len() {
        return Err(RegionError::Info(info_core::InfoError::DimensionMismatch(
            format!(
                "p(x_R|u) input size {:?} vs |U| = {}",
                pxr_given_u.input_sizes(),
                pu.len()
            ),
        )));
    }
    let xr = pxr_given_u.output_size();
    if dl1.input_sizes() != [xr] || dl2.input_sizes() != [xr] {
        return Err(RegionError::Info(info_core::InfoError::DimensionMismatch(
            "downlink kernels must take x_R as input".into(),
        )));
    }
    Ok(JointPmf::from_fn(
        vec![pu.len(), xr, dl1.output_size(), dl2.output_size()],
        vec!["u".into(), "x_r".into(), "y1".into(), "y2".into()],
        |idx| {
            pu.prob(idx[0])
                * pxr_given_u.prob(&idx[..1], idx[1])
                * dl1.prob(&idx[1..2], idx[2])
                * dl2.prob(&idx[1..2], idx[3])
        },
    )?)
}

/// Refinement rates of Eqs. (2a)-(2b) for a given auxiliary distribution
/// p(u) and conditional p(x_R|u). `rr1 >= rr2` holds by construction since
/// `I(X_R;Y1|U) >= 0`.
pub fn bc_refinement_rates(
    pu: &Pmf,
    pxr_given_u: &Kernel,
    dl1: &Kernel,
    dl2: &Kernel,
) -> Result<DlRefinementRates> {
    let j = refinement_joint(pu, pxr_given_u, dl1, dl2)?;
    let rr2 = mutual_information(&j, &[0], &[3])?;
    let fine = conditional_mutual_information(&j, &[1], &[2], &[0])?;
    let rates = DlRefinementRates {
        rr1: rr2 + fine,
        rr2,
    };
    debug_assert!(rates.rr1 >= rates.rr2);
    Ok(rates)
}

/// The Pareto frontier of achievable `(rr2, rr1)` refinement pairs over the
/// auxiliary-variable grid: every choice of `|U| <= |X_R| + 1`, p(u) and
/// p(x_R|u) at the grid resolution. Computed once per downlink pair and
/// reused across all uplink grid points.
///
/// The coarse layer must be decodable by both receivers, so
/// `rr2 = min{I(U;Y1), I(U;Y2)}`; when the node-2 downlink is the degraded
/// one this is exactly `I(U;Y2)`. The fine layer adds `I(X_R;Y1|U)`.
#[derive(Debug, Clone, PartialEq)]
pub struct RefinementFrontier {
    pairs: Vec<(f64, f64)>,
}

impl RefinementFrontier {
    pub fn compute(dl1: &Kernel, dl2: &Kernel, spec: &HfGridSpec) -> Result<Self> {
        let xr = dl1.input_sizes()[0];
        if spec.u_steps == 0 {
            return Err(RegionError::EmptyGrid);
        }
        let row_options = simplex_pmfs(xr, spec.u_steps)?;
        let mut raw = Vec::new();
        for u_size in 1..=xr + 1 {
            let pus = simplex_pmfs(u_size, spec.u_steps)?;
            // all assignments of one conditional row per u symbol
            let combos = row_options.len().pow(u_size as u32);
            for combo in 0..combos {
                let mut rows = Vec::with_capacity(u_size);
                let mut c = combo;
                for _ in 0..u_size {
                    rows.push(row_options[c % row_options.len()].probs().to_vec());
                    c /= row_options.len();
                }
                let kernel = Kernel::new(vec![u_size], xr, rows)?;
                for pu in &pus {
                    let j = refinement_joint(pu, &kernel, dl1, dl2)?;
                    let coarse = mutual_information(&j, &[0], &[3])?
                        .min(mutual_information(&j, &[0], &[2])?);
                    let fine = conditional_mutual_information(&j, &[1], &[2], &[0])?;
                    raw.push((coarse, coarse + fine));
                }
            }
        }
        Ok(Self {
            pairs: prune_pairs(raw),
        })
    }

    pub fn pairs(&self) -> &[(f64, f64)] {
        &self.pairs
    }
}

fn prune_pairs(mut raw: Vec<(f64, f64)>) -> Vec<(f64, f64)> {
    raw.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap().then(b.1.partial_cmp(&a.1).unwrap()));
    let mut kept: Vec<(f64, f64)> = Vec::new();
    let mut best = f64::NEG_INFINITY;
    for p in raw {
        if p.1 > best {
            kept.push(p);
            best = p.1;
        }
    }
    kept
}

/// The Theorem 2 caps at one uplink grid point for one refinement pair
/// `(rr2, rr1)`:
/// `r12 = min{I(X12;Y_R|X21), [rr2 - H(Y_R|X12,X21)]+}` and
/// `r21 = min{I(X21;Y_R|X12), [rr1 - H(Y_R|X12,X21)]+}`.
pub fn hf_caps(ul: &UplinkCaps, rr2: f64, rr1: f64) -> RatePoint {
    let r12 = ul.c12.min((rr2 - ul.h_noise).max(0.0));
    let r21 = ul.c21.min((rr1 - ul.h_noise).max(0.0));
    RatePoint::new(r12, r21)
}

/// Hash-and-forward achievable region (Theorem 2): frontier of the caps
/// over the input grid and the auxiliary-variable grid.
pub fn hf_region(
    uplink: &Kernel,
    dl1: &Kernel,
    dl2: &Kernel,
    spec: &HfGridSpec,
) -> Result<RateRegion> {
    let frontier = RefinementFrontier::compute(dl1, dl2, spec)?;
    let sizes = uplink.input_sizes().to_vec();
    let d12s = spec.input.pmfs(sizes[0])?;
    let d21s = spec.input.pmfs(sizes[1])?;
    let inputs: Vec<(Pmf, Pmf)> = d12s
        .iter()
        .flat_map(|a| d21s.iter().map(move |b| (a.clone(), b.clone())))
        .collect();
    let per_input: Vec<Result<Vec<RatePoint>>> = map_items(&inputs, |(a, b)| {
        let ul = uplink_caps(uplink, a, b)?;
        Ok(frontier
            .pairs()
            .iter()
            .map(|&(rr2, rr1)| hf_caps(&ul, rr2, rr1))
            .collect())
    });
    let mut points = Vec::new();
    for chunk in per_input {
        points.extend(chunk?);
    }
    Ok(RateRegion::from_points(
        Scheme::Hf,
        points,
        format!(
            "{{\"grid_steps\":{},\"u_steps\":{}}}",
            spec.input.steps, spec.u_steps
        ),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use info_core::binary_entropy;

    fn noiseless() -> Kernel {
        Kernel::bsc(0.0).unwrap()
    }

    #[test]
    fn refinement_copy_kernel_noiseless() {
        // U = X_R through noiseless DLs: rr1 = rr2 = 1
        let pu = Pmf::uniform(2).unwrap();
        let copy = Kernel::copy(2).unwrap();
        let r = bc_refinement_rates(&pu, &copy, &noiseless(), &noiseless()).unwrap();
        assert!((r.rr1 - 1.0).abs() < 1e-12);
        assert!((r.rr2 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn refinement_independent_u() {
        // U carries nothing; all refinement flows through the fine layer
        let pu = Pmf::uniform(2).unwrap();
        let rows = vec![vec![0.5, 0.5], vec![0.5, 0.5]];
        let indep = Kernel::new(vec![2], 2, rows).unwrap();
        let r =
            bc_refinement_rates(&pu, &indep, &Kernel::bsc(0.1).unwrap(), &noiseless()).unwrap();
        assert!(r.rr2.abs() < 1e-12);
        assert!((r.rr1 - (1.0 - binary_entropy(0.1).unwrap())).abs() < 1e-4);
    }

    #[test]
    fn refinement_coarse_layer_through_bsc() {
        let pu = Pmf::uniform(2).unwrap();
        let copy = Kernel::copy(2).unwrap();
        let r =
            bc_refinement_rates(&pu, &copy, &noiseless(), &Kernel::bsc(0.2).unwrap()).unwrap();
        assert!((r.rr2 - (1.0 - binary_entropy(0.2).unwrap())).abs() < 1e-4);
    }

    #[test]
    fn hf_caps_zero_coarse_rate_kills_r12() {
        let ul = UplinkCaps {
            c12: 0.5,
            c21: 0.5,
            sum: 0.6,
            h_noise: 0.469,
        };
        let p = hf_caps(&ul, 0.0, 0.8);
        assert_eq!(p.r12, 0.0);
        // weak coarse layer: [0.3 - 0.469]+ = 0
        let q = hf_caps(&ul, 0.3, 0.3);
        assert_eq!(q.r12, 0.0);
        assert_eq!(q.r21, 0.0);
    }

    #[test]
    fn hf_noiseless_dl_reaches_adder_corner() {
        let region = hf_region(
            &Kernel::binary_adder(0.1).unwrap(),
            &noiseless(),
            &noiseless(),
            &HfGridSpec::new(16, 4),
        )
        .unwrap();
        let cap = 1.0 - binary_entropy(0.1).unwrap();
        assert!(region.dominates(&RatePoint::new(cap - 1e-3, cap - 1e-3), 1e-9));
        assert!(!region.dominates(&RatePoint::new(cap + 1e-3, cap + 1e-3), 1e-9));
    }
}
