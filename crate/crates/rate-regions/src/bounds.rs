use info_core::{
    conditional_entropy, conditional_mutual_information, joint_from, mutual_information, JointPmf,
    Kernel, Pmf,
};

use crate::grid::GridSpec;
use crate::region::{RatePoint, RateRegion, Scheme};
use crate::{RegionError, Result};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Map a closure over work items, in parallel when the `parallel` feature
/// is enabled. Output order matches input order either way.
pub(crate) fn map_items<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

/// Uplink information quantities at one pair of input distributions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UplinkCaps {
    /// I(X12; Y_R | X21)
    pub c12: f64,
    /// I(X21; Y_R | X12)
    pub c21: f64,
    /// I(X12, X21; Y_R)
    pub sum: f64,
    /// H(Y_R | X12, X21)
    pub h_noise: f64,
}

/// Evaluate the uplink terms of Eqs. (1), (3) and (4) at independent input
/// distributions `d12`, `d21`.
pub fn uplink_caps(uplink: &Kernel, d12: &Pmf, d21: &Pmf) -> Result<UplinkCaps> {
    let j = joint_from(uplink, d12, d21)?;
    Ok(UplinkCaps {
        c12: conditional_mutual_information(&j, &[0], &[2], &[1])?,
        c21: conditional_mutual_information(&j, &[1], &[2], &[0])?,
        sum: mutual_information(&j, &[0, 1], &[2])?,
        h_noise: conditional_entropy(&j, &[2], &[0, 1])?,
    })
}

fn single_input_joint(kernel: &Kernel, input: &Pmf) -> Result<JointPmf> {
    if kernel.arity() != 1 {
        return Err(RegionError::Info(info_core::InfoError::DimensionMismatch(
            "downlink kernel must have one input".into(),
        )));
    }
    Ok(JointPmf::from_fn(
        vec![input.len(), kernel.output_size()],
        vec!["x_r".into(), "y".into()],
        |idx| input.prob(idx[0]) * kernel.prob(&idx[..1], idx[1]),
    )?)
}

/// I(X_R; Y) through a downlink kernel at relay input distribution `dxr`.
pub fn dl_rate(dl: &Kernel, dxr: &Pmf) -> Result<f64> {
    let j = single_input_joint(dl, dxr)?;
    Ok(mutual_information(&j, &[0], &[1])?)
}

/// The per-distribution cut-set caps of Eq. (1):
/// `r12 = min{I(X12;Y_R|X21), I(X_R;Y2)}` and symmetrically for `r21`.
pub fn cutset_caps(
    uplink: &Kernel,
    dl1: &Kernel,
    dl2: &Kernel,
    d12: &Pmf,
    d21: &Pmf,
    dxr: &Pmf,
) -> Result<RatePoint> {
    let ul = uplink_caps(uplink, d12, d21)?;
    let d1 = dl_rate(dl1, dxr)?;
    let d2 = dl_rate(dl2, dxr)?;
    Ok(RatePoint::new(ul.c12.min(d2), ul.c21.min(d1)))
}

/// The Shannon two-way inner-bound point at one pair of input distributions.
pub fn shannon_caps(uplink: &Kernel, d12: &Pmf, d21: &Pmf) -> Result<RatePoint> {
    let ul = uplink_caps(uplink, d12, d21)?;
    Ok(RatePoint::new(ul.c12, ul.c21))
}

fn uplink_grid_caps(
    uplink: &Kernel,
    grid: &GridSpec,
) -> Result<Vec<UplinkCaps>> {
    let sizes = uplink.input_sizes().to_vec();
    let d12s = grid.pmfs(sizes[0])?;
    let d21s = grid.pmfs(sizes[1])?;
    let pairs: Vec<(Pmf, Pmf)> = d12s
        .iter()
        .flat_map(|a| d21s.iter().map(move |b| (a.clone(), b.clone())))
        .collect();
    let caps: Vec<Result<UplinkCaps>> =
        map_items(&pairs, |(a, b)| uplink_caps(uplink, a, b));
    caps.into_iter().collect()
}

fn dl_grid_rates(dl1: &Kernel, dl2: &Kernel, grid: &GridSpec) -> Result<Vec<(f64, f64)>> {
    let dxrs = grid.pmfs(dl1.input_sizes()[0])?;
    dxrs.iter()
        .map(|dxr| Ok((dl_rate(dl1, dxr)?, dl_rate(dl2, dxr)?)))
        .collect()
}

fn grid_param_json(grid: &GridSpec) -> String {
    format!("{{\"grid_steps\":{}}}", grid.steps)
}

/// Cut-set outer bound (Eq. 1): Pareto frontier of the per-distribution caps
/// over the product grid of input distributions.
pub fn cutset_outer_bound(
    uplink: &Kernel,
    dl1: &Kernel,
    dl2: &Kernel,
    grid: &GridSpec,
) -> Result<RateRegion> {
    let ul = uplink_grid_caps(uplink, grid)?;
    let dl = dl_grid_rates(dl1, dl2, grid)?;
    let mut points = Vec::with_capacity(ul.len() * dl.len());
    for caps in &ul {
        for &(d1, d2) in &dl {
            points.push(RatePoint::new(caps.c12.min(d2), caps.c21.min(d1)));
        }
    }
    Ok(RateRegion::from_points(
        Scheme::Outer,
        points,
        grid_param_json(grid),
    ))
}

/// Decode-and-forward achievable region (Theorem 1): the per-distribution
/// caps of the cut-set bound intersected with the sum constraint
/// `r12 + r21 <= I(X12, X21; Y_R)`.
pub fn df_region(
    uplink: &Kernel,
    dl1: &Kernel,
    dl2: &Kernel,
    grid: &GridSpec,
) -> Result<RateRegion> {
    let ul = uplink_grid_caps(uplink, grid)?;
    let dl = dl_grid_rates(dl1, dl2, grid)?;
    let mut points = Vec::with_capacity(2 * ul.len() * dl.len());
    for caps in &ul {
        for &(d1, d2) in &dl {
            let a = caps.c12.min(d2);
            let b = caps.c21.min(d1);
            let s = caps.sum;
            // the two extreme corners of {r12 <= a, r21 <= b, r12 + r21 <= s}
            let x1 = a.min(s);
            points.push(RatePoint::new(x1, b.min((s - x1).max(0.0))));
            let y2 = b.min(s);
            points.push(RatePoint::new(a.min((s - y2).max(0.0)), y2));
        }
    }
    Ok(RateRegion::from_points(
        Scheme::Df,
        points,
        grid_param_json(grid),
    ))
}

/// Shannon's two-way inner bound at the relay input: the frontier of
/// `(I(X12;Y_R|X21), I(X21;Y_R|X12))` over independent input distributions.
pub fn shannon_inner_bound(uplink: &Kernel, grid: &GridSpec) -> Result<RateRegion> {
    let ul = uplink_grid_caps(uplink, grid)?;
    let points = ul
        .iter()
        .map(|caps| RatePoint::new(caps.c12, caps.c21))
        .collect();
    Ok(RateRegion::from_points(
        Scheme::ShannonInner,
        points,
        grid_param_json(grid),
    ))
}

/// Whether the downlink is strong enough for hash-and-forward to reach the
/// Shannon inner bound: `I(X_R;Y1) >= max{H(Y_R|X12), H(Y_R|X21)}` at the
/// given distributions. Caller is responsible for the symmetric-DL
/// assumption.
pub fn strong_dl_condition(
    uplink: &Kernel,
    dl: &Kernel,
    d12: &Pmf,
    d21: &Pmf,
    dxr: &Pmf,
) -> Result<bool> {
    let j = joint_from(uplink, d12, d21)?;
    let h_given_x12 = conditional_entropy(&j, &[2], &[0])?;
    let h_given_x21 = conditional_entropy(&j, &[2], &[1])?;
    let dl_info = dl_rate(dl, dxr)?;
    Ok(dl_info >= h_given_x12.max(h_given_x21))
}

#[cfg(test)]
mod tests {
    use super::*;
    use info_core::binary_entropy;

    fn noiseless() -> Kernel {
        Kernel::bsc(0.0).unwrap()
    }

    #[test]
    fn cutset_symmetric_adder_corner() {
        // binary adder eps_r = 0.1, noiseless DLs: corner at 1 - H(0.1)
        let region = cutset_outer_bound(
            &Kernel::binary_adder(0.1).unwrap(),
            &noiseless(),
            &noiseless(),
            &GridSpec::new(16),
        )
        .unwrap();
        let cap = 1.0 - binary_entropy(0.1).unwrap();
        assert!(region.dominates(&RatePoint::new(cap - 1e-3, cap - 1e-3), 1e-9));
        assert!(!region.dominates(&RatePoint::new(cap + 1e-3, cap + 1e-3), 1e-9));
    }

    #[test]
    fn cutset_all_noiseless_reaches_unit_corner() {
        let region = cutset_outer_bound(
            &Kernel::binary_adder(0.0).unwrap(),
            &noiseless(),
            &noiseless(),
            &GridSpec::new(8),
        )
        .unwrap();
        assert!(region.dominates(&RatePoint::new(1.0, 1.0), 1e-9));
    }

    #[test]
    fn cutset_weak_downlink_caps_r12() {
        // eps_r = 0, eps_2 = 0.2: r12 capped by 1 - H(0.2)
        let region = cutset_outer_bound(
            &Kernel::binary_adder(0.0).unwrap(),
            &noiseless(),
            &Kernel::bsc(0.2).unwrap(),
            &GridSpec::new(16),
        )
        .unwrap();
        let cap = 1.0 - binary_entropy(0.2).unwrap();
        let max_r12 = region
            .points()
            .iter()
            .map(|p| p.r12)
            .fold(f64::NEG_INFINITY, f64::max);
        assert!((max_r12 - cap).abs() < 1e-3);
    }

    #[test]
    fn df_sum_cap_noisy_adder() {
        let region = df_region(
            &Kernel::binary_adder(0.1).unwrap(),
            &noiseless(),
            &noiseless(),
            &GridSpec::new(16),
        )
        .unwrap();
        let sum_cap = 1.0 - binary_entropy(0.1).unwrap();
        let max_sum = region
            .points()
            .iter()
            .map(|p| p.r12 + p.r21)
            .fold(f64::NEG_INFINITY, f64::max);
        assert!((max_sum - sum_cap).abs() < 1e-3);
        // symmetric corner at half the sum cap
        assert!(region.dominates(
            &RatePoint::new(sum_cap / 2.0 - 1e-3, sum_cap / 2.0 - 1e-3),
            1e-9
        ));
    }

    #[test]
    fn df_sum_cap_noiseless_adder_is_one() {
        let region = df_region(
            &Kernel::binary_adder(0.0).unwrap(),
            &noiseless(),
            &noiseless(),
            &GridSpec::new(8),
        )
        .unwrap();
        let max_sum = region
            .points()
            .iter()
            .map(|p| p.r12 + p.r21)
            .fold(f64::NEG_INFINITY, f64::max);
        assert!((max_sum - 1.0).abs() < 1e-9);
    }

    #[test]
    fn shannon_adder_corners() {
        let cap = 1.0 - binary_entropy(0.1).unwrap();
        let region =
            shannon_inner_bound(&Kernel::binary_adder(0.1).unwrap(), &GridSpec::new(16)).unwrap();
        assert!(region.dominates(&RatePoint::new(cap - 1e-3, cap - 1e-3), 1e-9));

        let pure_noise =
            shannon_inner_bound(&Kernel::binary_adder(0.5).unwrap(), &GridSpec::new(8)).unwrap();
        for p in pure_noise.points() {
            assert!(p.r12.abs() < 1e-12 && p.r21.abs() < 1e-12);
        }

        let clean =
            shannon_inner_bound(&Kernel::binary_adder(0.0).unwrap(), &GridSpec::new(8)).unwrap();
        assert!(clean.dominates(&RatePoint::new(1.0, 1.0), 1e-9));
    }

    #[test]
    fn strong_dl_examples() {
        let uplink = Kernel::binary_adder(0.1).unwrap();
        let uni = Pmf::uniform(2).unwrap();
        // noiseless DL at uniform relay input: 1 >= H(Y_R|X12) = 1
        assert!(strong_dl_condition(&uplink, &noiseless(), &uni, &uni, &uni).unwrap());
        // BSC(0.3) downlink: 0.1187 < 1
        assert!(
            !strong_dl_condition(&uplink, &Kernel::bsc(0.3).unwrap(), &uni, &uni, &uni).unwrap()
        );
        // point-mass inputs leave only the noise entropy to cover
        let pm = Pmf::point_mass(2, 0).unwrap();
        assert!(strong_dl_condition(&uplink, &noiseless(), &pm, &pm, &uni).unwrap());
    }

    #[test]
    fn empty_grid_rejected() {
        let err = cutset_outer_bound(
            &Kernel::binary_adder(0.1).unwrap(),
            &noiseless(),
            &noiseless(),
            &GridSpec::new(0),
        );
        assert!(matches!(err, Err(RegionError::EmptyGrid)));
    }
}
