use info_core::Pmf;

use crate::{RegionError, Result};

/// All pmfs over `size` symbols whose entries are multiples of `1/steps`,
/// in lexicographic order. There are C(steps + size - 1, size - 1) of them;
/// this grows quickly with the alphabet size, so keep `steps` modest for
/// alphabets beyond binary.
pub fn simplex_pmfs(size: usize, steps: usize) -> Result<Vec<Pmf>> {
    if steps == 0 || size == 0 {
        return Err(RegionError::EmptyGrid);
    }
    let mut out = Vec::new();
    let mut counts = vec![0usize; size];
    fill(&mut counts, 0, steps, steps, &mut out);
    Ok(out)
}

fn fill(counts: &mut Vec<usize>, pos: usize, remaining: usize, steps: usize, out: &mut Vec<Pmf>) {
    if pos == counts.len() - 1 {
        counts[pos] = remaining;
        let probs: Vec<f64> = counts.iter().map(|&c| c as f64 / steps as f64).collect();
        out.push(Pmf::new(probs).expect("grid point is a valid pmf"));
        return;
    }
    for c in 0..=remaining {
        counts[pos] = c;
        fill(counts, pos + 1, remaining - c, steps, out);
    }
}

/// Resolution of the deterministic input-distribution search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridSpec {
    /// Steps per free parameter; a binary pmf grid has `steps + 1` points.
    pub steps: usize,
}

impl Default for GridSpec {
    fn default() -> Self {
        Self { steps: 64 }
    }
}

impl GridSpec {
    pub fn new(steps: usize) -> Self {
        Self { steps }
    }

    pub fn pmfs(&self, size: usize) -> Result<Vec<Pmf>> {
        simplex_pmfs(size, self.steps)
    }
}

/// Grid for the hash-and-forward search, which additionally enumerates the
/// auxiliary variable U: its alphabet size (up to `|X_R| + 1`), p(u), and
/// the rows of p(x_R | u). The auxiliary resolution is kept coarser than
/// the input resolution; for exact nesting of the induced p(x_R) marginals
/// in the input grid, pick `u_steps` with `u_steps^2` dividing `steps`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HfGridSpec {
    pub input: GridSpec,
    pub u_steps: usize,
}

impl Default for HfGridSpec {
    fn default() -> Self {
        Self {
            input: GridSpec::default(),
            u_steps: 4,
        }
    }
}

impl HfGridSpec {
    pub fn new(input_steps: usize, u_steps: usize) -> Self {
        Self {
            input: GridSpec::new(input_steps),
            u_steps,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binary_grid_counts() {
        let pmfs = simplex_pmfs(2, 4).unwrap();
        assert_eq!(pmfs.len(), 5);
        assert_eq!(pmfs[0].probs(), &[0.0, 1.0]);
        assert_eq!(pmfs[4].probs(), &[1.0, 0.0]);
    }

    #[test]
    fn ternary_grid_count_is_binomial() {
        // C(4 + 2, 2) = 15
        assert_eq!(simplex_pmfs(3, 4).unwrap().len(), 15);
    }

    #[test]
    fn zero_steps_is_an_error() {
        assert!(simplex_pmfs(2, 0).is_err());
    }
}
