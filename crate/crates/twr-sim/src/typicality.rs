use gf2_codes::BitWord;
use info_core::JointPmf;

use crate::{Result, SimError};

/// Strong (empirical-type) joint typicality: the tuple of words is typical
/// when every symbol-tuple frequency is within `eps_typ` of the joint pmf.
pub fn is_jointly_typical(words: &[&BitWord], joint: &JointPmf, eps_typ: f64) -> Result<bool> {
    if words.is_empty() {
        return Err(SimError::Config("empty word tuple".into()));
    }
    if joint.arity() != words.len() || joint.dims().iter().any(|&d| d != 2) {
        return Err(SimError::Config(format!(
            "joint pmf arity {:?} does not match {} binary words",
            joint.dims(),
            words.len()
        )));
    }
    let n = words[0].len();
    for w in words {
        if w.len() != n {
            return Err(SimError::LengthMismatch {
                expected: n,
                got: w.len(),
            });
        }
    }
    if n == 0 {
        return Err(SimError::Config("zero-length words".into()));
    }

    let cells = 1usize << words.len();
    let mut counts = vec![0u32; cells];
    for pos in 0..n {
        let mut cell = 0usize;
        for w in words {
            cell = (cell << 1) | w.bit(pos) as usize;
        }
        counts[cell] += 1;
    }

    let mut idx = vec![0usize; words.len()];
    for (cell, &c) in counts.iter().enumerate() {
        for (axis, slot) in idx.iter_mut().enumerate() {
            *slot = (cell >> (words.len() - 1 - axis)) & 1;
        }
        let freq = c as f64 / n as f64;
        if (freq - joint.prob(&idx)).abs() > eps_typ {
            return Ok(false);
        }
    }
    Ok(true)
}
