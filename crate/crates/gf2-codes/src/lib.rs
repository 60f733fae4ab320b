//! Linear block codes over GF(2).
//!
//! Codes are given by a full-rank k-by-n generator matrix. Decoding is
//! exhaustive minimum-Hamming-distance over all 2^k codewords, which is
//! maximum-likelihood for any BSC with crossover below 1/2.

mod code;
mod word;

pub use code::LinearCode;
pub use word::{codeword_sum, BitWord};

/// Block lengths above this make exhaustive decoding expensive; allowed,
/// but flagged.
pub const EXHAUSTIVE_BUDGET_N: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CodeError {
    #[error("message length k = {k} exceeds block length n = {n}")]
    KExceedsN { k: usize, n: usize },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("generator rows are linearly dependent (rank {rank} < k = {k})")]
    RankDeficient { rank: usize, k: usize },
    #[error("word length {0} unsupported (max 32)")]
    WordTooLong(usize),
    #[error("malformed code manifest: {0}")]
    Manifest(String),
}

pub type Result<T> = std::result::Result<T, CodeError>;
