use crate::{InfoError, JointPmf, Kernel, Pmf, Result};

/// Round-off tolerance below which a negative information value is clamped
/// to zero; anything more negative indicates a logic error upstream.
const NEG_CLAMP: f64 = 1e-12;

fn clamp_nonneg(v: f64) -> f64 {
    debug_assert!(v > -1e-9, "information measure {v} is negative beyond round-off");
    if v < 0.0 && v > -NEG_CLAMP {
        0.0
    } else {
        v.max(0.0)
    }
}

pub(crate) fn entropy_of_slice(probs: &[f64]) -> f64 {
    // 0 log 0 := 0
    -probs
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| p * p.log2())
        .sum::<f64>()
}

/// Binary entropy function ℋ(p) in bits.
pub fn binary_entropy(p: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&p) {
        return Err(InfoError::ProbabilityOutOfRange(p));
    }
    Ok(entropy_of_slice(&[p, 1.0 - p]))
}

/// Shannon entropy of a pmf, in bits.
pub fn entropy(d: &Pmf) -> f64 {
    entropy_of_slice(d.probs())
}

/// Joint distribution `p(x12, x21, y_r) = p(x12) p(x21) p(y_r | x12, x21)`
/// for independent inputs driving a two-input kernel.
pub fn joint_from(uplink: &Kernel, d12: &Pmf, d21: &Pmf) -> Result<JointPmf> {
    if uplink.arity() != 2 {
        return Err(InfoError::DimensionMismatch(
            "uplink kernel must have two inputs".into(),
        ));
    }
    if uplink.input_sizes() != [d12.len(), d21.len()] {
        return Err(InfoError::DimensionMismatch(format!(
            "kernel inputs {:?} vs pmf sizes [{}, {}]",
            uplink.input_sizes(),
            d12.len(),
            d21.len()
        )));
    }
    JointPmf::from_fn(
        vec![d12.len(), d21.len(), uplink.output_size()],
        vec!["x12".into(), "x21".into(), "y_r".into()],
        |idx| d12.prob(idx[0]) * d21.prob(idx[1]) * uplink.prob(&idx[..2], idx[2]),
    )
}

fn disjoint_union(j: &JointPmf, sets: &[&[usize]]) -> Result<Vec<usize>> {
    let mut seen = vec![false; j.arity()];
    let mut union = Vec::new();
    for set in sets {
        for &a in *set {
            if a >= j.arity() {
                return Err(InfoError::BadAxes(format!("axis {a} out of range")));
            }
            if seen[a] {
                return Err(InfoError::BadAxes(format!("axis {a} appears twice")));
            }
            seen[a] = true;
            union.push(a);
        }
    }
    Ok(union)
}

/// Mutual information I(A; B) = H(A) + H(B) − H(A, B), in bits.
///
/// Axes not named in either set are marginalized out.
pub fn mutual_information(j: &JointPmf, axes_a: &[usize], axes_b: &[usize]) -> Result<f64> {
    if axes_a.is_empty() || axes_b.is_empty() {
        return Err(InfoError::BadAxes("empty axis set".into()));
    }
    let ab = disjoint_union(j, &[axes_a, axes_b])?;
    let ha = j.axes_entropy(axes_a)?;
    let hb = j.axes_entropy(axes_b)?;
    let hab = j.axes_entropy(&ab)?;
    Ok(clamp_nonneg(ha + hb - hab))
}

/// Conditional mutual information
/// I(A; B | C) = H(A, C) + H(B, C) − H(A, B, C) − H(C), in bits.
pub fn conditional_mutual_information(
    j: &JointPmf,
    axes_a: &[usize],
    axes_b: &[usize],
    axes_c: &[usize],
) -> Result<f64> {
    if axes_a.is_empty() || axes_b.is_empty() {
        return Err(InfoError::BadAxes("empty axis set".into()));
    }
    if axes_c.is_empty() {
        return mutual_information(j, axes_a, axes_b);
    }
    let abc = disjoint_union(j, &[axes_a, axes_b, axes_c])?;
    let ac: Vec<usize> = axes_a.iter().chain(axes_c).copied().collect();
    let bc: Vec<usize> = axes_b.iter().chain(axes_c).copied().collect();
    let hac = j.axes_entropy(&ac)?;
    let hbc = j.axes_entropy(&bc)?;
    let habc = j.axes_entropy(&abc)?;
    let hc = j.axes_entropy(axes_c)?;
    Ok(clamp_nonneg(hac + hbc - habc - hc))
}

/// Conditional entropy H(A | C) = H(A, C) − H(C), in bits.
pub fn conditional_entropy(j: &JointPmf, axes_a: &[usize], axes_c: &[usize]) -> Result<f64> {
    if axes_a.is_empty() {
        return Err(InfoError::BadAxes("empty axis set".into()));
    }
    if axes_c.is_empty() {
        return j.axes_entropy(axes_a);
    }
    let ac = disjoint_union(j, &[axes_a, axes_c])?;
    let hac = j.axes_entropy(&ac)?;
    let hc = j.axes_entropy(axes_c)?;
    Ok(clamp_nonneg(hac - hc))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binary_entropy_endpoints() {
        assert_eq!(binary_entropy(0.5).unwrap(), 1.0);
        assert_eq!(binary_entropy(0.0).unwrap(), 0.0);
        assert_eq!(binary_entropy(1.0).unwrap(), 0.0);
        assert!(binary_entropy(-0.01).is_err());
        assert!(binary_entropy(1.01).is_err());
    }

    #[test]
    fn binary_entropy_oracle_value() {
        // extended-precision evaluation of -p log2 p - (1-p) log2 (1-p) at p = 0.11
        assert!((binary_entropy(0.11).unwrap() - 0.49991).abs() < 1e-4);
    }

    #[test]
    fn entropy_extremes() {
        assert_eq!(entropy(&Pmf::uniform(4).unwrap()), 2.0);
        assert_eq!(entropy(&Pmf::point_mass(5, 2).unwrap()), 0.0);
        assert!((entropy(&Pmf::binary(0.1).unwrap()) - 0.46900).abs() < 1e-4);
    }

    #[test]
    fn joint_from_noiseless_adder() {
        let k = Kernel::binary_adder(0.0).unwrap();
        let u = Pmf::uniform(2).unwrap();
        let j = joint_from(&k, &u, &u).unwrap();
        for x12 in 0..2 {
            for x21 in 0..2 {
                for y in 0..2 {
                    let expect = if y == x12 ^ x21 { 0.25 } else { 0.0 };
                    assert_eq!(j.prob(&[x12, x21, y]), expect);
                }
            }
        }
    }

    #[test]
    fn joint_from_point_mass_equals_kernel_row() {
        let k = Kernel::binary_adder(0.1).unwrap();
        let d12 = Pmf::point_mass(2, 1).unwrap();
        let d21 = Pmf::point_mass(2, 0).unwrap();
        let j = joint_from(&k, &d12, &d21).unwrap();
        assert_eq!(j.prob(&[1, 0, 1]), 0.9);
        assert_eq!(j.prob(&[1, 0, 0]), 0.1);
        assert_eq!(j.prob(&[0, 0, 0]), 0.0);
    }

    #[test]
    fn joint_from_noisy_adder_cell() {
        // 0.5 * 0.5 * 0.1 by direct product
        let k = Kernel::binary_adder(0.1).unwrap();
        let u = Pmf::uniform(2).unwrap();
        let j = joint_from(&k, &u, &u).unwrap();
        assert!((j.prob(&[0, 0, 1]) - 0.025).abs() < 1e-15);
    }

    #[test]
    fn mi_independent_is_zero() {
        let u = Pmf::uniform(2).unwrap();
        let j = JointPmf::from_fn(
            vec![2, 2],
            vec!["a".into(), "b".into()],
            |idx| u.prob(idx[0]) * u.prob(idx[1]),
        )
        .unwrap();
        assert_eq!(mutual_information(&j, &[0], &[1]).unwrap(), 0.0);
    }

    #[test]
    fn mi_bsc_uniform_input() {
        // I(X;Y) over BSC(0.1) with uniform input = 1 - H(0.1)
        let k = Kernel::bsc(0.1).unwrap();
        let u = Pmf::uniform(2).unwrap();
        let j = JointPmf::from_fn(
            vec![2, 2],
            vec!["x".into(), "y".into()],
            |idx| u.prob(idx[0]) * k.prob(&idx[..1], idx[1]),
        )
        .unwrap();
        let mi = mutual_information(&j, &[0], &[1]).unwrap();
        assert!((mi - 0.53100).abs() < 1e-4);

        let noiseless = Kernel::bsc(0.0).unwrap();
        let j0 = JointPmf::from_fn(
            vec![2, 2],
            vec!["x".into(), "y".into()],
            |idx| u.prob(idx[0]) * noiseless.prob(&idx[..1], idx[1]),
        )
        .unwrap();
        assert!((mutual_information(&j0, &[0], &[1]).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn cmi_adder_equals_one_minus_h() {
        let u = Pmf::uniform(2).unwrap();
        let j = joint_from(&Kernel::binary_adder(0.1).unwrap(), &u, &u).unwrap();
        let cmi = conditional_mutual_information(&j, &[0], &[2], &[1]).unwrap();
        assert!((cmi - 0.53100).abs() < 1e-4);

        let j0 = joint_from(&Kernel::binary_adder(0.0).unwrap(), &u, &u).unwrap();
        let cmi0 = conditional_mutual_information(&j0, &[0], &[2], &[1]).unwrap();
        assert!((cmi0 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn cmi_independent_output_is_zero() {
        // eps = 0.5 makes the adder output pure noise
        let u = Pmf::uniform(2).unwrap();
        let j = joint_from(&Kernel::binary_adder(0.5).unwrap(), &u, &u).unwrap();
        let cmi = conditional_mutual_information(&j, &[0], &[2], &[1]).unwrap();
        assert!(cmi.abs() < 1e-12);
    }

    #[test]
    fn conditional_entropy_noise_floor() {
        let u = Pmf::uniform(2).unwrap();
        let j = joint_from(&Kernel::binary_adder(0.1).unwrap(), &u, &u).unwrap();
        let h = conditional_entropy(&j, &[2], &[0, 1]).unwrap();
        assert!((h - 0.46900).abs() < 1e-4);

        let j0 = joint_from(&Kernel::binary_adder(0.0).unwrap(), &u, &u).unwrap();
        assert_eq!(conditional_entropy(&j0, &[2], &[0, 1]).unwrap(), 0.0);
    }

    #[test]
    fn conditional_entropy_independent_equals_marginal() {
        let j = JointPmf::from_fn(
            vec![2, 2],
            vec!["a".into(), "c".into()],
            |idx| [0.3, 0.7][idx[0]] * 0.5,
        )
        .unwrap();
        let h = conditional_entropy(&j, &[0], &[1]).unwrap();
        let ha = entropy(&Pmf::new(vec![0.3, 0.7]).unwrap());
        assert!((h - ha).abs() < 1e-12);
    }

    #[test]
    fn overlapping_axes_rejected() {
        let u = Pmf::uniform(2).unwrap();
        let j = joint_from(&Kernel::binary_adder(0.1).unwrap(), &u, &u).unwrap();
        assert!(mutual_information(&j, &[0], &[0]).is_err());
        assert!(conditional_mutual_information(&j, &[0], &[1], &[1]).is_err());
        assert!(conditional_entropy(&j, &[2], &[2]).is_err());
    }
}
