use gf2_codes::{BitWord, LinearCode};
use info_core::{joint_from, Kernel, Pmf};
use rate_regions::BinaryAdderParams;

use crate::df::RelayIndexPair;
use crate::hash::{hf_hash, HashConfig};
use crate::typicality::is_jointly_typical;
use crate::{Result, SimError};

const EXHAUSTIVE_BIN_N: usize = 16;

/// Which receiver is running the list decoder. Node 1 sees both hash
/// indices; node 2 only the coarse one, so its list spans every fine bin.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecoderRole {
    Node1,
    Node2,
}

/// Joint law of (x12, x21, y_R) under uniform inputs on the noisy adder.
fn uplink_joint(uplink: &BinaryAdderParams) -> Result<info_core::JointPmf> {
    let kernel = Kernel::binary_adder(uplink.eps_r)?;
    let u = Pmf::uniform(2)?;
    Ok(joint_from(&kernel, &u, &u)?)
}

/// Hash-and-forward list decoding. The receiver enumerates the bin named by
/// the relay index (the full `(i, j)` bin for node 1, the union over fine
/// bins at coarse index `j` for node 2), then searches for the unique
/// candidate message whose codeword is jointly typical with its own side
/// codeword and at least one list member.
pub fn hf_list_decode(
    idx: &RelayIndexPair,
    side_codeword: &BitWord,
    candidate_code: &LinearCode,
    uplink: &BinaryAdderParams,
    eps_typ: f64,
    h: &HashConfig,
    role: DecoderRole,
) -> Result<u32> {
    if h.n > EXHAUSTIVE_BIN_N {
        return Err(SimError::Config(format!(
            "bin enumeration needs n <= {EXHAUSTIVE_BIN_N}, got {}",
            h.n
        )));
    }
    if side_codeword.len() != h.n || candidate_code.n() != h.n {
        return Err(SimError::LengthMismatch {
            expected: h.n,
            got: side_codeword.len().min(candidate_code.n()),
        });
    }

    let mut list = Vec::new();
    for bits in 0u32..1 << h.n {
        let y = BitWord::from_bits(h.n, bits)?;
        let hashed = hf_hash(&y, h)?;
        let member = match role {
            DecoderRole::Node1 => hashed == *idx,
            DecoderRole::Node2 => hashed.j == idx.j,
        };
        if member {
            list.push(y);
        }
    }

    let joint = uplink_joint(uplink)?;
    let mut found: Option<u32> = None;
    for msg in 0u32..1 << candidate_code.k() {
        let cw = BitWord::from_bits(h.n, candidate_code.encode_bits(msg))?;
        let typical = list.iter().try_fold(false, |acc, y| -> Result<bool> {
            if acc {
                return Ok(true);
            }
            let words = match role {
                DecoderRole::Node1 => [side_codeword, &cw, y],
                DecoderRole::Node2 => [&cw, side_codeword, y],
            };
            is_jointly_typical(&words, &joint, eps_typ)
        })?;
        if typical {
            if found.is_some() {
                return Err(SimError::Ambiguity);
            }
            found = Some(msg);
        }
    }
    found.ok_or(SimError::Erasure)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(eps_r: f64) -> BinaryAdderParams {
        BinaryAdderParams::new(eps_r, 0.1, 0.1).unwrap()
    }

    #[test]
    fn noiseless_exact_type_recovers_message() {
        // eps_typ ~ 0 forces an exact empirical match, so only the true
        // (x12, x21, y) triple survives when y = x12 ^ x21. The codeword
        // for msg 1 is jointly balanced with the side word: every bit pair
        // appears exactly n/4 times.
        let n = 8;
        let code = LinearCode::new(n, 3, vec![0x33, 0x55, 0x18]).unwrap();
        let h = HashConfig::new(n, 6, 3, 21).unwrap();
        let side = BitWord::from_bits(n, 0x0F).unwrap();
        let msg = 1u32;
        let cw = BitWord::from_bits(n, code.encode_bits(msg)).unwrap();
        let y = BitWord::from_bits(n, side.bits() ^ cw.bits()).unwrap();
        let idx = hf_hash(&y, &h).unwrap();
        let got = hf_list_decode(&idx, &side, &code, &params(0.0), 1e-9, &h, DecoderRole::Node1);
        assert_eq!(got.unwrap(), msg);
    }

    #[test]
    fn empty_typical_list_is_erasure() {
        let n = 8;
        let code = LinearCode::random(n, 3, 11).unwrap();
        let h = HashConfig::new(n, 6, 3, 21).unwrap();
        let side = BitWord::from_bits(n, 0b0110_1001).unwrap();
        // pick a bin holding no word jointly typical with any codeword
        let mut erased = 0;
        for i in 0..h.bins_fine() {
            for j in 0..h.bins_coarse() {
                let idx = RelayIndexPair { i, j };
                if matches!(
                    hf_list_decode(&idx, &side, &code, &params(0.0), 1e-9, &h, DecoderRole::Node1),
                    Err(SimError::Erasure)
                ) {
                    erased += 1;
                }
            }
        }
        assert!(erased > 0, "expected at least one erasing bin");
    }

    #[test]
    fn oversized_block_rejected() {
        let code = LinearCode::random(18, 4, 1).unwrap();
        let h = HashConfig::new(18, 6, 3, 0).unwrap();
        let side = BitWord::zero(18).unwrap();
        let idx = RelayIndexPair { i: 0, j: 0 };
        assert!(matches!(
            hf_list_decode(&idx, &side, &code, &params(0.1), 0.1, &h, DecoderRole::Node1),
            Err(SimError::Config(_))
        ));
    }
}
