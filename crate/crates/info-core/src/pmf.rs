use crate::{InfoError, Result, MASS_TOL};

/// A finite alphabet; symbols are the indices `0..size`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Alphabet {
    size: usize,
}

impl Alphabet {
    pub fn new(size: usize) -> Result<Self> {
        if size == 0 {
            return Err(InfoError::EmptyAlphabet);
        }
        Ok(Self { size })
    }

    pub const BINARY: Alphabet = Alphabet { size: 2 };

    pub fn size(&self) -> usize {
        self.size
    }
}

/// A probability mass function over a finite alphabet.
#[derive(Debug, Clone, PartialEq)]
pub struct Pmf {
    probs: Vec<f64>,
}

impl Pmf {
    pub fn new(probs: Vec<f64>) -> Result<Self> {
        if probs.is_empty() {
            return Err(InfoError::EmptyAlphabet);
        }
        let mut sum = 0.0;
        for &p in &probs {
            if p < 0.0 {
                return Err(InfoError::NegativeEntry(p));
            }
            sum += p;
        }
        if (sum - 1.0).abs() > MASS_TOL {
            return Err(InfoError::MassMismatch(sum));
        }
        Ok(Self { probs })
    }

    /// Bernoulli distribution: `P(1) = p`.
    pub fn binary(p: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(InfoError::ProbabilityOutOfRange(p));
        }
        Ok(Self {
            probs: vec![1.0 - p, p],
        })
    }

    pub fn uniform(size: usize) -> Result<Self> {
        if size == 0 {
            return Err(InfoError::EmptyAlphabet);
        }
        Ok(Self {
            probs: vec![1.0 / size as f64; size],
        })
    }

    pub fn point_mass(size: usize, symbol: usize) -> Result<Self> {
        if symbol >= size {
            return Err(InfoError::DimensionMismatch(format!(
                "symbol {symbol} outside alphabet of size {size}"
            )));
        }
        let mut probs = vec![0.0; size];
        probs[symbol] = 1.0;
        Ok(Self { probs })
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn prob(&self, symbol: usize) -> f64 {
        self.probs[symbol]
    }
}

/// A conditional distribution `p(output | input tuple)` with input arity 1 or 2.
///
/// Rows are indexed by the flattened input tuple, first input slowest.
#[derive(Debug, Clone, PartialEq)]
pub struct Kernel {
    inputs: Vec<usize>,
    output: usize,
    rows: Vec<Vec<f64>>,
}

impl Kernel {
    pub fn new(inputs: Vec<usize>, output: usize, rows: Vec<Vec<f64>>) -> Result<Self> {
        if inputs.is_empty() || inputs.len() > 2 {
            return Err(InfoError::DimensionMismatch(format!(
                "kernel input arity {} not in {{1, 2}}",
                inputs.len()
            )));
        }
        let expected: usize = inputs.iter().product();
        if rows.len() != expected {
            return Err(InfoError::DimensionMismatch(format!(
                "{} rows for {} input tuples",
                rows.len(),
                expected
            )));
        }
        for row in &rows {
            if row.len() != output {
                return Err(InfoError::DimensionMismatch(format!(
                    "row length {} vs output size {}",
                    row.len(),
                    output
                )));
            }
            // each row must itself be a valid pmf
            Pmf::new(row.clone())?;
        }
        Ok(Self {
            inputs,
            output,
            rows,
        })
    }

    /// Binary symmetric channel with crossover probability `eps`.
    pub fn bsc(eps: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&eps) {
            return Err(InfoError::ProbabilityOutOfRange(eps));
        }
        Self::new(
            vec![2],
            2,
            vec![vec![1.0 - eps, eps], vec![eps, 1.0 - eps]],
        )
    }

    /// Noisy binary adder: output is the XOR of the two inputs flipped with
    /// probability `eps`.
    pub fn binary_adder(eps: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&eps) {
            return Err(InfoError::ProbabilityOutOfRange(eps));
        }
        let mut rows = Vec::with_capacity(4);
        for x in 0..2usize {
            for y in 0..2usize {
                let mut row = vec![0.0; 2];
                let sum = x ^ y;
                row[sum] = 1.0 - eps;
                row[sum ^ 1] = eps;
                rows.push(row);
            }
        }
        Self::new(vec![2, 2], 2, rows)
    }

    /// Deterministic identity kernel over an alphabet of the given size.
    pub fn copy(size: usize) -> Result<Self> {
        let rows = (0..size)
            .map(|x| {
                let mut row = vec![0.0; size];
                row[x] = 1.0;
                row
            })
            .collect();
        Self::new(vec![size], size, rows)
    }

    pub fn arity(&self) -> usize {
        self.inputs.len()
    }

    pub fn input_sizes(&self) -> &[usize] {
        &self.inputs
    }

    pub fn output_size(&self) -> usize {
        self.output
    }

    pub fn row(&self, inputs: &[usize]) -> &[f64] {
        debug_assert_eq!(inputs.len(), self.inputs.len());
        let mut idx = 0;
        for (i, &s) in inputs.iter().zip(&self.inputs) {
            debug_assert!(*i < s);
            idx = idx * s + i;
        }
        &self.rows[idx]
    }

    pub fn prob(&self, inputs: &[usize], output: usize) -> f64 {
        self.row(inputs)[output]
    }
}
