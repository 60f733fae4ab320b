use std::fmt;

use crate::{CodeError, Result};

/// A fixed-length binary word, bit `i` stored at bit position `i` of `bits`.
///
/// Lengths up to 32 cover the whole exhaustive-decoding regime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BitWord {
    len: usize,
    bits: u32,
}

impl BitWord {
    pub fn zero(len: usize) -> Result<Self> {
        Self::from_bits(len, 0)
    }

    pub fn from_bits(len: usize, bits: u32) -> Result<Self> {
        if len > 32 {
            return Err(CodeError::WordTooLong(len));
        }
        Ok(Self {
            len,
            bits: bits & mask(len),
        })
    }

    /// Parse a string of '0'/'1' characters; the leftmost character is bit 0.
    pub fn parse(s: &str) -> Result<Self> {
        if s.is_empty() || s.len() > 32 {
            return Err(CodeError::WordTooLong(s.len()));
        }
        let mut bits = 0u32;
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => bits |= 1 << i,
                _ => return Err(CodeError::Manifest(format!("invalid bit character {c:?}"))),
            }
        }
        Self::from_bits(s.len(), bits)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn bit(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.bits >> i) & 1 == 1
    }

    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    pub fn hamming_distance(&self, other: &BitWord) -> u32 {
        debug_assert_eq!(self.len, other.len);
        (self.bits ^ other.bits).count_ones()
    }
}

pub(crate) fn mask(len: usize) -> u32 {
    if len >= 32 {
        u32::MAX
    } else {
        (1u32 << len) - 1
    }
}

/// Componentwise XOR of two equal-length words.
pub fn codeword_sum(a: &BitWord, b: &BitWord) -> Result<BitWord> {
    if a.len() != b.len() {
        return Err(CodeError::LengthMismatch {
            expected: a.len(),
            got: b.len(),
        });
    }
    BitWord::from_bits(a.len(), a.bits() ^ b.bits())
}

impl fmt::Display for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", (self.bits >> i) & 1)?;
        }
        Ok(())
    }
}
