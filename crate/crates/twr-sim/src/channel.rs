use gf2_codes::BitWord;
use rand::Rng;

use crate::{Result, SimError};

fn bernoulli_word<R: Rng>(len: usize, eps: f64, rng: &mut R) -> u32 {
    let mut bits = 0u32;
    for i in 0..len {
        if rng.random_bool(eps) {
            bits |= 1 << i;
        }
    }
    bits
}

/// One use of the noisy binary adder uplink per position:
/// `y = x12 ^ x21 ^ z` with `z ~ Bernoulli(eps_r)` i.i.d.
pub fn adder_uplink<R: Rng>(
    x12: &BitWord,
    x21: &BitWord,
    eps_r: f64,
    rng: &mut R,
) -> Result<BitWord> {
    if x12.len() != x21.len() {
        return Err(SimError::LengthMismatch {
            expected: x12.len(),
            got: x21.len(),
        });
    }
    let noise = bernoulli_word(x12.len(), eps_r, rng);
    Ok(BitWord::from_bits(x12.len(), x12.bits() ^ x21.bits() ^ noise)?)
}

/// One block through a BSC: `y = x ^ z` with `z ~ Bernoulli(eps)` i.i.d.
pub fn bsc_apply<R: Rng>(x: &BitWord, eps: f64, rng: &mut R) -> Result<BitWord> {
    let noise = bernoulli_word(x.len(), eps, rng);
    Ok(BitWord::from_bits(x.len(), x.bits() ^ noise)?)
}
