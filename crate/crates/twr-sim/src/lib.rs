//! Executable models of the separated two-way relay channel: noisy binary
//! adder uplink, BSC downlinks, the decode-and-forward index transcoder with
//! its side-information inverses, hash-and-forward binning with list
//! decoding, and the full time-shared physical-layer network-coding protocol
//! measured by reproducible Monte Carlo runs.

mod channel;
mod df;
mod hash;
mod hf_decode;
mod protocol;
mod report;
pub mod rng;
mod typicality;

pub use channel::{adder_uplink, bsc_apply};
pub use df::{node1_df_decode, node2_df_decode, relay_df_transcode, MessagePair, RelayIndexPair};
pub use hash::{hf_hash, HashConfig};
pub use hf_decode::{hf_list_decode, DecoderRole};
pub use protocol::{pnc_round, ProtocolConfig, RoundOutcome, Session, SimScheme};
pub use report::{monte_carlo, SimReport};
pub use typicality::is_jointly_typical;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SimError {
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("relay column {got} inconsistent with side information column {expected}")]
    SideInfoInconsistent { expected: u32, got: u32 },
    #[error("recomposed index {0} out of message range")]
    IndexOutOfRange(u64),
    #[error("list decoding found no jointly typical candidate")]
    Erasure,
    #[error("list decoding found multiple jointly typical candidates")]
    Ambiguity,
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Code(#[from] gf2_codes::CodeError),
    #[error(transparent)]
    Info(#[from] info_core::InfoError),
    #[error(transparent)]
    Region(#[from] rate_regions::RegionError),
}

pub type Result<T> = std::result::Result<T, SimError>;
