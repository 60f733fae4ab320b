use serde::{Deserialize, Serialize};

use crate::{Result, SimError};

/// A pair of source message indices with their bit budgets. Budgets stand
/// in for `n R_12` and `n R_21`; `b12 >= b21` by the usual labeling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MessagePair {
    pub w12: u32,
    pub w21: u32,
    pub b12: u32,
    pub b21: u32,
}

impl MessagePair {
    pub fn new(w12: u32, w21: u32, b12: u32, b21: u32) -> Result<Self> {
        if b12 < b21 || b12 > 31 {
            return Err(SimError::Config(format!(
                "bit budgets must satisfy b12 >= b21 (and fit u32), got ({b12}, {b21})"
            )));
        }
        if w12 >= 1 << b12 || w21 >= 1 << b21 {
            return Err(SimError::Config(format!(
                "message ({w12}, {w21}) out of range for budgets ({b12}, {b21})"
            )));
        }
        Ok(Self { w12, w21, b12, b21 })
    }

    pub fn m12(&self) -> u32 {
        1 << self.b12
    }

    pub fn m21(&self) -> u32 {
        1 << self.b21
    }
}

/// The relay's network-coded downlink index: column `i` and row `j` of the
/// two-dimensional relay codebook.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelayIndexPair {
    pub i: u32,
    pub j: u32,
}

/// Decode-and-forward index transcoding at the relay:
/// `i = floor(w12 / M21)` selects the column and `j = (w12 + w21) mod M21`
/// the row, compressing the pair into a codebook of cardinality `M12`.
pub fn relay_df_transcode(w: &MessagePair) -> RelayIndexPair {
    let m21_mask = w.m21() - 1;
    RelayIndexPair {
        i: w.w12 >> w.b21,
        j: (w.w12.wrapping_add(w.w21)) & m21_mask,
    }
}

/// Node 1 recovers `w21` from the relay index using its own `w12` as side
/// information: `w21 = (j - w12) mod M21`. The column must match the one
/// implied by the side information; a mismatch signals a downlink decoding
/// failure upstream.
pub fn node1_df_decode(idx: &RelayIndexPair, w12_side: u32, b21: u32) -> Result<u32> {
    let m21 = 1u32 << b21;
    let expected_col = w12_side >> b21;
    if idx.i != expected_col {
        return Err(SimError::SideInfoInconsistent {
            expected: expected_col,
            got: idx.i,
        });
    }
    Ok((idx.j.wrapping_sub(w12_side)) & (m21 - 1))
}

/// Node 2 recovers `w12` from the relay index using its own `w21`:
/// the column carries the high bits and `(j - w21) mod M21` the low bits.
pub fn node2_df_decode(idx: &RelayIndexPair, w21_side: u32, b12: u32, b21: u32) -> Result<u32> {
    let m21 = 1u32 << b21;
    let low = (idx.j.wrapping_sub(w21_side)) & (m21 - 1);
    let w12 = ((idx.i as u64) << b21) | low as u64;
    if w12 >= 1u64 << b12 {
        return Err(SimError::IndexOutOfRange(w12));
    }
    Ok(w12 as u32)
}
