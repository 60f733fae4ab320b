use gf2_codes::BitWord;
use serde::{Deserialize, Serialize};

use crate::df::RelayIndexPair;
use crate::rng::splitmix64;
use crate::{Result, SimError};

/// Binning layout for hash-and-forward: the relay output space is hashed
/// into `2^(b_r1 - b_r2)` fine bins (index `i`) by `2^(b_r2)` coarse bins
/// (index `j`). Node 1 receives both indices, node 2 only the coarse one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HashConfig {
    pub n: usize,
    pub fine_bits: u32,
    pub coarse_bits: u32,
    pub hash_seed: u64,
}

impl HashConfig {
    /// `b_r1` and `b_r2` are the total and coarse bin budgets in bits,
    /// with `b_r1 >= b_r2`.
    pub fn new(n: usize, b_r1: u32, b_r2: u32, hash_seed: u64) -> Result<Self> {
        if b_r1 < b_r2 {
            return Err(SimError::Config(format!(
                "bin budgets must satisfy b_r1 >= b_r2, got ({b_r1}, {b_r2})"
            )));
        }
        if b_r1 as usize > n {
            return Err(SimError::Config(format!(
                "bin budget {b_r1} exceeds word length {n}"
            )));
        }
        Ok(Self {
            n,
            fine_bits: b_r1 - b_r2,
            coarse_bits: b_r2,
            hash_seed,
        })
    }

    pub fn bins_fine(&self) -> u32 {
        1 << self.fine_bits
    }

    pub fn bins_coarse(&self) -> u32 {
        1 << self.coarse_bits
    }
}

/// Seeded uniform hash of a received word into a (fine, coarse) bin pair.
/// Deterministic given `hash_seed` and a permutation of the `2^n` word
/// space (seeded xorshift-multiply rounds, each bijective mod `2^n`), so
/// every bin holds exactly `2^(n - b_r1)` words.
pub fn hf_hash(y: &BitWord, h: &HashConfig) -> Result<RelayIndexPair> {
    if y.len() != h.n {
        return Err(SimError::LengthMismatch {
            expected: h.n,
            got: y.len(),
        });
    }
    let n = h.n as u32;
    let mask = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let c1 = (splitmix64(h.hash_seed) as u32) | 1;
    let c2 = (splitmix64(h.hash_seed.wrapping_add(1)) as u32) | 1;
    let offset = splitmix64(h.hash_seed.wrapping_add(2)) as u32 & mask;
    let shift = (n / 2).max(1);

    let mut v = y.bits() ^ offset;
    v ^= v >> shift;
    v = v.wrapping_mul(c1) & mask;
    v ^= v >> shift;
    v = v.wrapping_mul(c2) & mask;
    v ^= v >> shift;

    let j = v & (h.bins_coarse() - 1);
    let i = (v >> h.coarse_bits) & (h.bins_fine() - 1);
    Ok(RelayIndexPair { i, j })
}
