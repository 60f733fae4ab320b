//! Finite-alphabet probability distributions and Shannon information measures.
//!
//! Everything here operates on explicit tables over index-based alphabets
//! (symbols are `0..size`). All information quantities are in bits.

mod joint;
mod measures;
mod pmf;

pub use joint::JointPmf;
pub use measures::{
    binary_entropy, conditional_entropy, conditional_mutual_information, entropy, joint_from,
    mutual_information,
};
pub use pmf::{Alphabet, Kernel, Pmf};

/// Tolerance for probability-mass checks.
pub const MASS_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum InfoError {
    #[error("probability {0} outside [0, 1]")]
    ProbabilityOutOfRange(f64),
    #[error("probabilities sum to {0}, expected 1")]
    MassMismatch(f64),
    #[error("negative probability entry {0}")]
    NegativeEntry(f64),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("axis sets overlap or are out of range: {0}")]
    BadAxes(String),
    #[error("alphabet size must be at least 1")]
    EmptyAlphabet,
}

pub type Result<T> = std::result::Result<T, InfoError>;
