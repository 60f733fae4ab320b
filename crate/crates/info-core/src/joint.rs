use crate::{InfoError, Pmf, Result, MASS_TOL};

/// A joint distribution over a tuple of finite alphabets, stored as a flat
/// row-major table (last axis fastest). Axes carry labels for readability;
/// all operations address axes by index.
#[derive(Debug, Clone, PartialEq)]
pub struct JointPmf {
    dims: Vec<usize>,
    labels: Vec<String>,
    table: Vec<f64>,
}

impl JointPmf {
    pub fn new(dims: Vec<usize>, labels: Vec<String>, table: Vec<f64>) -> Result<Self> {
        if dims.is_empty() || dims.iter().any(|&d| d == 0) {
            return Err(InfoError::EmptyAlphabet);
        }
        if labels.len() != dims.len() {
            return Err(InfoError::DimensionMismatch(format!(
                "{} labels for {} axes",
                labels.len(),
                dims.len()
            )));
        }
        let expected: usize = dims.iter().product();
        if table.len() != expected {
            return Err(InfoError::DimensionMismatch(format!(
                "table length {} vs {} cells",
                table.len(),
                expected
            )));
        }
        let mut sum = 0.0;
        for &p in &table {
            if p < 0.0 {
                return Err(InfoError::NegativeEntry(p));
            }
            sum += p;
        }
        if (sum - 1.0).abs() > MASS_TOL {
            return Err(InfoError::MassMismatch(sum));
        }
        Ok(Self {
            dims,
            labels,
            table,
        })
    }

    /// Build from a probability function over index tuples.
    pub fn from_fn<F>(dims: Vec<usize>, labels: Vec<String>, f: F) -> Result<Self>
    where
        F: Fn(&[usize]) -> f64,
    {
        let total: usize = dims.iter().product();
        let mut table = Vec::with_capacity(total);
        let mut idx = vec![0usize; dims.len()];
        for _ in 0..total {
            table.push(f(&idx));
            // odometer increment, last axis fastest
            for ax in (0..dims.len()).rev() {
                idx[ax] += 1;
                if idx[ax] < dims[ax] {
                    break;
                }
                idx[ax] = 0;
            }
        }
        Self::new(dims, labels, table)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn arity(&self) -> usize {
        self.dims.len()
    }

    pub fn prob(&self, idx: &[usize]) -> f64 {
        self.table[self.flat_index(idx)]
    }

    fn flat_index(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.dims.len());
        let mut flat = 0;
        for (i, d) in idx.iter().zip(&self.dims) {
            debug_assert!(i < d);
            flat = flat * d + i;
        }
        flat
    }

    fn check_axes(&self, axes: &[usize]) -> Result<()> {
        for &a in axes {
            if a >= self.dims.len() {
                return Err(InfoError::BadAxes(format!(
                    "axis {a} out of range for arity {}",
                    self.dims.len()
                )));
            }
        }
        Ok(())
    }

    /// Marginal over the given axes, preserving their order.
    pub fn marginal(&self, axes: &[usize]) -> Result<JointPmf> {
        self.check_axes(axes)?;
        let mut seen = vec![false; self.dims.len()];
        for &a in axes {
            if seen[a] {
                return Err(InfoError::BadAxes(format!("axis {a} repeated")));
            }
            seen[a] = true;
        }
        let out_dims: Vec<usize> = axes.iter().map(|&a| self.dims[a]).collect();
        let out_labels: Vec<String> = axes.iter().map(|&a| self.labels[a].clone()).collect();
        let out_total: usize = out_dims.iter().product();
        let mut out = vec![0.0; out_total];

        let mut idx = vec![0usize; self.dims.len()];
        for &p in &self.table {
            let mut flat = 0;
            for (&a, &d) in axes.iter().zip(&out_dims) {
                flat = flat * d + idx[a];
            }
            out[flat] += p;
            for ax in (0..self.dims.len()).rev() {
                idx[ax] += 1;
                if idx[ax] < self.dims[ax] {
                    break;
                }
                idx[ax] = 0;
            }
        }
        JointPmf::new(out_dims, out_labels, out)
    }

    /// Marginal over a single axis, as a plain `Pmf`.
    pub fn marginal_pmf(&self, axis: usize) -> Result<Pmf> {
        let m = self.marginal(&[axis])?;
        Pmf::new(m.table)
    }

    /// Shannon entropy of the whole table, in bits.
    pub fn entropy(&self) -> f64 {
        crate::measures::entropy_of_slice(&self.table)
    }

    /// Entropy of the marginal over the given axes, in bits.
    pub fn axes_entropy(&self, axes: &[usize]) -> Result<f64> {
        Ok(self.marginal(axes)?.entropy())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn marginal_sums_axes() {
        // p(x, y) with x uniform, y = x
        let j = JointPmf::new(
            vec![2, 2],
            labels(&["x", "y"]),
            vec![0.5, 0.0, 0.0, 0.5],
        )
        .unwrap();
        let mx = j.marginal_pmf(0).unwrap();
        assert_eq!(mx.probs(), &[0.5, 0.5]);
        assert!((j.entropy() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn marginal_preserves_axis_order() {
        let j = JointPmf::new(
            vec![2, 3],
            labels(&["a", "b"]),
            vec![0.1, 0.2, 0.3, 0.2, 0.1, 0.1],
        )
        .unwrap();
        let swapped = j.marginal(&[1, 0]).unwrap();
        assert_eq!(swapped.dims(), &[3, 2]);
        assert!((swapped.prob(&[2, 0]) - 0.3).abs() < 1e-15);
    }

    #[test]
    fn rejects_overlapping_axes() {
        let j = JointPmf::new(vec![2, 2], labels(&["a", "b"]), vec![0.25; 4]).unwrap();
        assert!(j.marginal(&[0, 0]).is_err());
        assert!(j.marginal(&[5]).is_err());
    }
}
