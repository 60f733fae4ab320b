use gf2_codes::{BitWord, LinearCode};
use info_core::{joint_from, JointPmf, Kernel, Pmf};
use rand::Rng;
use rate_regions::{BinaryAdderParams, RatePoint};
use serde::{Deserialize, Serialize};

use crate::channel::{adder_uplink, bsc_apply};
use crate::df::{node1_df_decode, node2_df_decode, relay_df_transcode, MessagePair};
use crate::hash::{hf_hash, HashConfig};
use crate::hf_decode::DecoderRole;
use crate::rng::{stream_rng, stream_seed, Phase, Role};
use crate::typicality::is_jointly_typical;
use crate::{Result, SimError};

/// Largest message budget the dense downlink codebook is built for.
const MAX_B12: u32 = 20;
/// Largest block length the hash-and-forward round enumerates exhaustively.
const MAX_HF_N: usize = 16;

/// Which relaying strategy a simulated round runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SimScheme {
    Pnc,
    DfIndex,
    Hf,
}

impl std::fmt::Display for SimScheme {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SimScheme::Pnc => "pnc",
            SimScheme::DfIndex => "df-index",
            SimScheme::Hf => "hf",
        })
    }
}

impl std::str::FromStr for SimScheme {
    type Err = SimError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pnc" => Ok(SimScheme::Pnc),
            "df-index" => Ok(SimScheme::DfIndex),
            "hf" => Ok(SimScheme::Hf),
            other => Err(SimError::Config(format!("unknown scheme '{other}'"))),
        }
    }
}

/// Full description of a reproducible experiment. Real-valued rates are
/// mapped to integer bit budgets by `floor(n * rate)`; the time share
/// `alpha` splits the block into a phase-1 segment of `n - ceil(alpha n)`
/// uses and a phase-2 segment of `ceil(alpha n)` uses.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProtocolConfig {
    pub n: usize,
    pub alpha: f64,
    pub rates: RatePoint,
    pub channel: BinaryAdderParams,
    pub seed: u64,
    pub trials: u64,
    /// Typicality slack for hash-and-forward list decoding.
    pub eps_typ: f64,
    /// Hash bin budgets `(b_r1, b_r2)` for hash-and-forward; `None` means
    /// lossless binning (every received word in its own bin).
    pub hash_budget: Option<(u32, u32)>,
}

impl ProtocolConfig {
    pub fn b12(&self) -> u32 {
        (self.n as f64 * self.rates.r12 + 1e-9).floor() as u32
    }

    pub fn b21(&self) -> u32 {
        (self.n as f64 * self.rates.r21 + 1e-9).floor() as u32
    }

    /// Phase-2 length `ceil(alpha n)`.
    pub fn n2(&self) -> usize {
        (self.alpha * self.n as f64).ceil() as usize
    }

    /// Phase-1 length, the remainder of the block.
    pub fn n1(&self) -> usize {
        self.n - self.n2()
    }

    fn validate(&self) -> Result<()> {
        if self.n == 0 || self.n > 32 {
            return Err(SimError::Config(format!(
                "block length must be in 1..=32, got {}",
                self.n
            )));
        }
        if !(0.0..=1.0).contains(&self.alpha) {
            return Err(SimError::Config(format!(
                "alpha must be in [0, 1], got {}",
                self.alpha
            )));
        }
        if self.trials == 0 {
            return Err(SimError::Config("trials must be at least 1".into()));
        }
        if self.rates.r12 < 0.0 || self.rates.r21 < 0.0 {
            return Err(SimError::Config("rates must be nonnegative".into()));
        }
        if !(0.0..=1.0).contains(&self.eps_typ) {
            return Err(SimError::Config(format!(
                "eps_typ must be in [0, 1], got {}",
                self.eps_typ
            )));
        }
        let (b12, b21) = (self.b12(), self.b21());
        if b12 < b21 {
            return Err(SimError::Config(format!(
                "bit budgets must satisfy b12 >= b21, got ({b12}, {b21})"
            )));
        }
        if b12 > MAX_B12 {
            return Err(SimError::Config(format!(
                "b12 = {b12} exceeds the downlink codebook budget of {MAX_B12}"
            )));
        }
        if b12 as usize > self.n {
            return Err(SimError::Config(format!(
                "b12 = {b12} exceeds the block length {}",
                self.n
            )));
        }
        debug_assert_eq!(self.n1() + self.n2(), self.n);
        Ok(())
    }
}

/// Success flags for one simulated round.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoundOutcome {
    pub relay_ok: bool,
    pub node1_ok: bool,
    pub node2_ok: bool,
}

/// Per-configuration state shared across trials: the phase codes, the dense
/// two-dimensional downlink codebook, the hash layout, and the uplink joint
/// law. Building it once keeps the per-trial cost to channel draws and ML
/// scans.
pub struct Session {
    cfg: ProtocolConfig,
    b12: u32,
    b21: u32,
    n1: usize,
    n2: usize,
    /// Phase-1 code for the excess message bits; absent when phase 1 is empty.
    code_phase1: Option<LinearCode>,
    /// Shared phase-2 code; absent when phase 2 is empty.
    code_phase2: Option<LinearCode>,
    /// Downlink words indexed by `(i << b21) | j`.
    dl_codebook: Vec<u32>,
    /// Full-block codes for the hash-and-forward round.
    hf_code12: LinearCode,
    hf_code21: LinearCode,
    hash_cfg: HashConfig,
    /// Received words grouped by full `(i, j)` bin.
    bins_pair: Vec<Vec<u32>>,
    /// Received words grouped by coarse bin only.
    bins_coarse: Vec<Vec<u32>>,
    uplink_joint: JointPmf,
}

impl Session {
    pub fn new(cfg: &ProtocolConfig) -> Result<Self> {
        cfg.validate()?;
        let (b12, b21) = (cfg.b12(), cfg.b21());
        let (n1, n2) = (cfg.n1(), cfg.n2());

        // phase codes exist only when their dimension fits the phase length;
        // configs violating that can still run the full-block schemes
        let code_phase1 = if n1 > 0 && (b12 - b21) as usize <= n1 {
            Some(LinearCode::random(
                n1,
                (b12 - b21) as usize,
                stream_seed(cfg.seed, 0, Phase::Codebooks, Role::Source),
            )?)
        } else {
            None
        };
        let code_phase2 = if n2 > 0 && b21 as usize <= n2 {
            Some(LinearCode::random(
                n2,
                b21 as usize,
                stream_seed(cfg.seed, 1, Phase::Codebooks, Role::Source),
            )?)
        } else {
            None
        };

        let mut dl_rng = stream_rng(cfg.seed, 0, Phase::Codebooks, Role::Relay);
        let word_mask = if cfg.n == 32 {
            u32::MAX
        } else {
            (1u32 << cfg.n) - 1
        };
        // random but collision-free: duplicate entries would make even
        // noiseless downlink decoding ambiguous
        let need = 1u64 << b12;
        let total = 1u64 << cfg.n;
        let dl_codebook: Vec<u32> = if need * 2 > total {
            let mut all: Vec<u32> = (0..total as u32).collect();
            for idx in 0..need as usize {
                let pick = idx + dl_rng.random_range(0..(total as usize - idx));
                all.swap(idx, pick);
            }
            all.truncate(need as usize);
            all
        } else {
            let mut seen = std::collections::HashSet::with_capacity(need as usize);
            let mut words = Vec::with_capacity(need as usize);
            while words.len() < need as usize {
                let w = dl_rng.random::<u32>() & word_mask;
                if seen.insert(w) {
                    words.push(w);
                }
            }
            words
        };

        let hf_n = cfg.n.min(MAX_HF_N);
        let (b_r1, b_r2) = cfg.hash_budget.unwrap_or((hf_n as u32, hf_n as u32));
        let hash_cfg = HashConfig::new(
            hf_n,
            b_r1,
            b_r2,
            stream_seed(cfg.seed, 0, Phase::Hashing, Role::Relay),
        )?;
        let hf_code12 = LinearCode::random(
            hf_n,
            (b12 as usize).min(hf_n),
            stream_seed(cfg.seed, 2, Phase::Codebooks, Role::Source),
        )?;
        let hf_code21 = LinearCode::random(
            hf_n,
            (b21 as usize).min(hf_n),
            stream_seed(cfg.seed, 3, Phase::Codebooks, Role::Source),
        )?;

        let mut bins_pair =
            vec![Vec::new(); (hash_cfg.bins_fine() as usize) << hash_cfg.coarse_bits];
        let mut bins_coarse = vec![Vec::new(); hash_cfg.bins_coarse() as usize];
        for bits in 0u32..1 << hf_n {
            let idx = hf_hash(&BitWord::from_bits(hf_n, bits)?, &hash_cfg)?;
            bins_pair[((idx.i << hash_cfg.coarse_bits) | idx.j) as usize].push(bits);
            bins_coarse[idx.j as usize].push(bits);
        }

        let kernel = Kernel::binary_adder(cfg.channel.eps_r)?;
        let u = Pmf::uniform(2)?;
        let uplink_joint = joint_from(&kernel, &u, &u)?;

        Ok(Self {
            cfg: cfg.clone(),
            b12,
            b21,
            n1,
            n2,
            code_phase1,
            code_phase2,
            dl_codebook,
            hf_code12,
            hf_code21,
            hash_cfg,
            bins_pair,
            bins_coarse,
            uplink_joint,
        })
    }

    pub fn config(&self) -> &ProtocolConfig {
        &self.cfg
    }

    fn draw_messages<R: Rng>(&self, rng: &mut R) -> (u32, u32) {
        let w12 = if self.b12 == 0 {
            0
        } else {
            rng.random_range(0..1u64 << self.b12) as u32
        };
        let w21 = if self.b21 == 0 {
            0
        } else {
            rng.random_range(0..1u64 << self.b21) as u32
        };
        (w12, w21)
    }

    /// Minimum-distance scan over the known downlink column `i`; ties go to
    /// the lowest row index.
    fn dl_decode_column(&self, i: u32, received: u32) -> u32 {
        let mut best_j = 0u32;
        let mut best_d = u32::MAX;
        for j in 0..1u32 << self.b21 {
            let cw = self.dl_codebook[((i << self.b21) | j) as usize];
            let d = (cw ^ received).count_ones();
            if d < best_d {
                best_d = d;
                best_j = j;
            }
        }
        best_j
    }

    /// Minimum-distance scan over the full downlink codebook.
    fn dl_decode_full(&self, received: u32) -> (u32, u32) {
        let mut best = 0u32;
        let mut best_d = u32::MAX;
        for (idx, &cw) in self.dl_codebook.iter().enumerate() {
            let d = (cw ^ received).count_ones();
            if d < best_d {
                best_d = d;
                best = idx as u32;
            }
        }
        (best >> self.b21, best & ((1u32 << self.b21) - 1))
    }

    /// Relay broadcast of codebook entry `(i, j)` through both BSC downlinks,
    /// followed by each node's ML decode. Returns the decoded `(j1_hat)` for
    /// node 1 (which knows its column) and `(i_hat, j_hat)` for node 2.
    fn downlink(&self, i: u32, j: u32, i_known: u32, trial: u64) -> Result<(u32, (u32, u32))> {
        let word = BitWord::from_bits(
            self.cfg.n,
            self.dl_codebook[((i << self.b21) | j) as usize],
        )?;
        let mut rng1 = stream_rng(self.cfg.seed, trial, Phase::Downlink, Role::Node1);
        let mut rng2 = stream_rng(self.cfg.seed, trial, Phase::Downlink, Role::Node2);
        let y1 = bsc_apply(&word, self.cfg.channel.eps_1, &mut rng1)?;
        let y2 = bsc_apply(&word, self.cfg.channel.eps_2, &mut rng2)?;
        let j1_hat = self.dl_decode_column(i_known, y1.bits());
        let pair2 = self.dl_decode_full(y2.bits());
        Ok((j1_hat, pair2))
    }

    /// One round of the time-shared physical-layer network-coding protocol:
    /// phase 1 carries the excess bits of `w12` alone, phase 2 superimposes
    /// both low parts through the shared linear code so the relay decodes
    /// their sum directly, and the downlink delivers the `(column, row)`
    /// index of a random two-dimensional codebook.
    pub fn pnc_round(&self, trial: u64) -> Result<RoundOutcome> {
        let cfg = &self.cfg;
        if self.b12 > self.b21 && self.code_phase1.is_none() {
            return Err(SimError::Config(format!(
                "phase-1 dimension {} exceeds its {} channel uses",
                self.b12 - self.b21,
                self.n1
            )));
        }
        if self.b21 > 0 && self.code_phase2.is_none() {
            return Err(SimError::Config(format!(
                "phase-2 dimension {} exceeds its {} channel uses",
                self.b21, self.n2
            )));
        }
        let mut msg_rng = stream_rng(cfg.seed, trial, Phase::Messages, Role::Source);
        let (w12, w21) = self.draw_messages(&mut msg_rng);
        let low_mask = (1u64 << self.b21) as u32 - 1;
        let hi = w12 >> self.b21;
        let lo = w12 & low_mask;

        // phase 1: user 1 alone, user 2 silent (all-zero input)
        let hi_hat = match &self.code_phase1 {
            Some(code) => {
                let x1 = BitWord::from_bits(self.n1, code.encode_bits(hi))?;
                let silent = BitWord::zero(self.n1)?;
                let mut rng = stream_rng(cfg.seed, trial, Phase::Uplink1, Role::Relay);
                let y = adder_uplink(&x1, &silent, cfg.channel.eps_r, &mut rng)?;
                code.ml_decode_bits(y.bits()).0
            }
            None => 0,
        };

        // phase 2: both users through the shared code; the relay decodes the
        // XOR of the two messages as a single codeword
        let s = lo ^ w21;
        let s_hat = match &self.code_phase2 {
            Some(code) => {
                let x12 = BitWord::from_bits(self.n2, code.encode_bits(lo))?;
                let x21 = BitWord::from_bits(self.n2, code.encode_bits(w21))?;
                let mut rng = stream_rng(cfg.seed, trial, Phase::Uplink2, Role::Relay);
                let y = adder_uplink(&x12, &x21, cfg.channel.eps_r, &mut rng)?;
                code.ml_decode_bits(y.bits()).0
            }
            None => 0,
        };
        let relay_ok = hi_hat == hi && s_hat == s;

        let (j1_hat, (i2_hat, j2_hat)) = self.downlink(hi_hat, s_hat, hi, trial)?;
        let node1_ok = (j1_hat ^ lo) == w21;
        let node2_ok = ((i2_hat << self.b21) | (j2_hat ^ w21)) == w12;

        Ok(RoundOutcome {
            relay_ok,
            node1_ok,
            node2_ok,
        })
    }

    /// One decode-and-forward round with an ideal uplink: the relay
    /// transcodes the message pair into its compressed index, and the round
    /// measures the downlink index-decoding chain.
    pub fn df_round(&self, trial: u64) -> Result<RoundOutcome> {
        let cfg = &self.cfg;
        let mut msg_rng = stream_rng(cfg.seed, trial, Phase::Messages, Role::Source);
        let (w12, w21) = self.draw_messages(&mut msg_rng);
        let pair = MessagePair::new(w12, w21, self.b12, self.b21)?;
        let idx = relay_df_transcode(&pair);

        let i_known = w12 >> self.b21;
        let (j1_hat, (i2_hat, j2_hat)) = self.downlink(idx.i, idx.j, i_known, trial)?;

        let node1_ok = matches!(
            node1_df_decode(
                &crate::df::RelayIndexPair { i: i_known, j: j1_hat },
                w12,
                self.b21,
            ),
            Ok(w) if w == w21
        );
        let node2_ok = matches!(
            node2_df_decode(
                &crate::df::RelayIndexPair { i: i2_hat, j: j2_hat },
                w21,
                self.b12,
                self.b21,
            ),
            Ok(w) if w == w12
        );

        Ok(RoundOutcome {
            relay_ok: true,
            node1_ok,
            node2_ok,
        })
    }

    fn list_decode(
        &self,
        list: &[u32],
        side: &BitWord,
        code: &LinearCode,
        role: DecoderRole,
    ) -> Result<u32> {
        let n = self.hash_cfg.n;
        let mut found: Option<u32> = None;
        for msg in 0u32..1 << code.k() {
            let cw = BitWord::from_bits(n, code.encode_bits(msg))?;
            let mut typical = false;
            for &bits in list {
                let y = BitWord::from_bits(n, bits)?;
                let words = match role {
                    DecoderRole::Node1 => [side, &cw, &y],
                    DecoderRole::Node2 => [&cw, side, &y],
                };
                if is_jointly_typical(&words, &self.uplink_joint, self.cfg.eps_typ)? {
                    typical = true;
                    break;
                }
            }
            if typical {
                if found.is_some() {
                    return Err(SimError::Ambiguity);
                }
                found = Some(msg);
            }
        }
        found.ok_or(SimError::Erasure)
    }

    /// One hash-and-forward round over the full block: both users transmit
    /// simultaneously, the relay hashes its raw reception into `(i, j)` and
    /// the bin indices reach the nodes intact; each node list-decodes its
    /// bin against the typicality test. The relay flag records whether the
    /// reception was itself typical.
    pub fn hf_round(&self, trial: u64) -> Result<RoundOutcome> {
        let cfg = &self.cfg;
        let n = self.hash_cfg.n;
        let mut msg_rng = stream_rng(cfg.seed, trial, Phase::Messages, Role::Source);
        let (w12, w21) = self.draw_messages(&mut msg_rng);
        if cfg.n > MAX_HF_N {
            return Err(SimError::Config(format!(
                "hash-and-forward rounds need n <= {MAX_HF_N}, got {}",
                cfg.n
            )));
        }

        let cw12 = BitWord::from_bits(n, self.hf_code12.encode_bits(w12))?;
        let cw21 = BitWord::from_bits(n, self.hf_code21.encode_bits(w21))?;
        let mut rng = stream_rng(cfg.seed, trial, Phase::Uplink2, Role::Relay);
        let y = adder_uplink(&cw12, &cw21, cfg.channel.eps_r, &mut rng)?;

        let relay_ok =
            is_jointly_typical(&[&cw12, &cw21, &y], &self.uplink_joint, cfg.eps_typ)?;

        let idx = hf_hash(&y, &self.hash_cfg)?;
        let pair_bin =
            &self.bins_pair[((idx.i << self.hash_cfg.coarse_bits) | idx.j) as usize];
        let coarse_bin = &self.bins_coarse[idx.j as usize];

        let node1_ok = matches!(
            self.list_decode(pair_bin, &cw12, &self.hf_code21, DecoderRole::Node1),
            Ok(w) if w == w21
        );
        let node2_ok = matches!(
            self.list_decode(coarse_bin, &cw21, &self.hf_code12, DecoderRole::Node2),
            Ok(w) if w == w12
        );

        Ok(RoundOutcome {
            relay_ok,
            node1_ok,
            node2_ok,
        })
    }

    pub fn round(&self, scheme: SimScheme, trial: u64) -> Result<RoundOutcome> {
        match scheme {
            SimScheme::Pnc => self.pnc_round(trial),
            SimScheme::DfIndex => self.df_round(trial),
            SimScheme::Hf => self.hf_round(trial),
        }
    }
}

/// One full protocol round from a bare config; builds the per-config state
/// each call, so batched runs should go through [`Session`] or
/// [`crate::monte_carlo`].
pub fn pnc_round(cfg: &ProtocolConfig, trial: u64) -> Result<RoundOutcome> {
    Session::new(cfg)?.pnc_round(trial)
}
