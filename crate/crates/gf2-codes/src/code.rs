use once_cell::sync::OnceCell;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::word::{mask, BitWord};
use crate::{CodeError, Result, EXHAUSTIVE_BUDGET_N};

/// An [n, k] linear block code over GF(2), given by a full-rank generator
/// matrix. Row `i` of the generator is stored as a bit pattern of length `n`.
#[derive(Debug, Clone)]
pub struct LinearCode {
    n: usize,
    k: usize,
    rows: Vec<u32>,
    codebook: OnceCell<Vec<u32>>,
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.k == other.k && self.rows == other.rows
    }
}

fn gf2_rank(rows: &[u32]) -> usize {
    let mut basis = [0u32; 32];
    let mut rank = 0;
    for &row in rows {
        let mut r = row;
        while r != 0 {
            let lead = 31 - r.leading_zeros() as usize;
            if basis[lead] == 0 {
                basis[lead] = r;
                rank += 1;
                break;
            }
            r ^= basis[lead];
        }
    }
    rank
}

impl LinearCode {
    pub fn new(n: usize, k: usize, rows: Vec<u32>) -> Result<Self> {
        if k > n {
            return Err(CodeError::KExceedsN { k, n });
        }
        if n == 0 || n > 32 {
            return Err(CodeError::WordTooLong(n));
        }
        if rows.len() != k {
            return Err(CodeError::LengthMismatch {
                expected: k,
                got: rows.len(),
            });
        }
        let rows: Vec<u32> = rows.into_iter().map(|r| r & mask(n)).collect();
        let rank = gf2_rank(&rows);
        if rank != k {
            return Err(CodeError::RankDeficient { rank, k });
        }
        Ok(Self {
            n,
            k,
            rows,
            codebook: OnceCell::new(),
        })
    }

    /// Generator drawn uniformly from full-rank k-by-n binary matrices,
    /// deterministically from `seed` (rejection sampling on rank).
    pub fn random(n: usize, k: usize, seed: u64) -> Result<Self> {
        if k > n {
            return Err(CodeError::KExceedsN { k, n });
        }
        if n == 0 || n > 32 {
            return Err(CodeError::WordTooLong(n));
        }
        if n > EXHAUSTIVE_BUDGET_N {
            log::warn!("block length n = {n} exceeds the exhaustive-decoding budget of {EXHAUSTIVE_BUDGET_N}");
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        loop {
            let rows: Vec<u32> = (0..k).map(|_| rng.random::<u32>() & mask(n)).collect();
            if gf2_rank(&rows) == k {
                return Self::new(n, k, rows);
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn generator_rows(&self) -> &[u32] {
        &self.rows
    }

    /// Codeword for a raw message index (low `k` bits).
    pub fn encode_bits(&self, msg: u32) -> u32 {
        debug_assert_eq!(msg & !mask(self.k), 0);
        let mut cw = 0u32;
        for (i, &row) in self.rows.iter().enumerate() {
            if (msg >> i) & 1 == 1 {
                cw ^= row;
            }
        }
        cw
    }

    pub fn encode(&self, msg: &BitWord) -> Result<BitWord> {
        if msg.len() != self.k {
            return Err(CodeError::LengthMismatch {
                expected: self.k,
                got: msg.len(),
            });
        }
        BitWord::from_bits(self.n, self.encode_bits(msg.bits()))
    }

    /// All 2^k codewords, indexed by message value. Built on first use.
    pub fn codebook(&self) -> &[u32] {
        self.codebook.get_or_init(|| {
            (0u32..1 << self.k).map(|m| self.encode_bits(m)).collect()
        })
    }

    /// Minimum-Hamming-distance decoding of a raw received pattern.
    /// Ties are broken by the lowest message index.
    pub fn ml_decode_bits(&self, received: u32) -> (u32, u32) {
        let received = received & mask(self.n);
        let mut best_msg = 0u32;
        let mut best_cw = 0u32;
        let mut best_dist = u32::MAX;
        for (m, &cw) in self.codebook().iter().enumerate() {
            let d = (cw ^ received).count_ones();
            if d < best_dist {
                best_dist = d;
                best_msg = m as u32;
                best_cw = cw;
            }
        }
        (best_msg, best_cw)
    }

    /// ML decoding for any BSC with crossover below 1/2: the closest codeword
    /// in Hamming distance, together with its message preimage.
    pub fn ml_decode_bsc(&self, received: &BitWord) -> Result<(BitWord, BitWord)> {
        if received.len() != self.n {
            return Err(CodeError::LengthMismatch {
                expected: self.n,
                got: received.len(),
            });
        }
        let (msg, cw) = self.ml_decode_bits(received.bits());
        Ok((
            BitWord::from_bits(self.k, msg)?,
            BitWord::from_bits(self.n, cw)?,
        ))
    }

    /// Serialize as an `n,k` header line followed by one hex-encoded
    /// generator row per line (row-major).
    pub fn to_manifest(&self) -> String {
        let digits = self.n.div_ceil(4);
        let mut out = format!("{},{}\n", self.n, self.k);
        for &row in &self.rows {
            out.push_str(&format!("{row:0width$x}\n", width = digits));
        }
        out
    }

    pub fn from_manifest(s: &str) -> Result<Self> {
        let mut lines = s.lines();
        let header = lines
            .next()
            .ok_or_else(|| CodeError::Manifest("empty manifest".into()))?;
        let (n_str, k_str) = header
            .split_once(',')
            .ok_or_else(|| CodeError::Manifest(format!("bad header {header:?}")))?;
        let n: usize = n_str
            .trim()
            .parse()
            .map_err(|_| CodeError::Manifest(format!("bad n {n_str:?}")))?;
        let k: usize = k_str
            .trim()
            .parse()
            .map_err(|_| CodeError::Manifest(format!("bad k {k_str:?}")))?;
        let rows: Vec<u32> = lines
            .map(|l| {
                u32::from_str_radix(l.trim(), 16)
                    .map_err(|_| CodeError::Manifest(format!("bad row {l:?}")))
            })
            .collect::<Result<_>>()?;
        Self::new(n, k, rows)
    }
}
