//! Post-processing of N-port S-parameter sweeps: TARC, active reflection,
//! impedance band edges, coupling summaries and mismatch conversions.
//!
//! TARC for an excitation `a` is `sqrt(Σ|b_i|² / Σ|a_i|²)` with `b = S·a`,
//! evaluated independently at every frequency.

mod bands;
mod coupling;
mod excitation;
mod mismatch;
mod tarc;
mod trace;

pub use bands::{band_edges, Band};
pub use coupling::{classify_pair, coupling_report, CouplingCategory, CouplingMax, CouplingReport, PairTrace};
pub use excitation::ExcitationVector;
pub use mismatch::{gamma_to_vswr, mismatch_loss_db, realized_gain, vswr_to_gamma};
pub use tarc::{active_reflection, tarc, tarc_linear};
pub use trace::{FrequencyTrace, TraceScale};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AnalysisError {
    #[error("excitation has {found} entries but the network has {ports} ports")]
    DimensionMismatch { ports: usize, found: usize },
    #[error("excitation is all zero")]
    ZeroExcitation,
    #[error("excitation entry {0} is not finite")]
    NonFiniteExcitation(usize),
    #[error("port {0} is out of range")]
    PortOutOfRange(usize),
    #[error("active reflection at port {0} is undefined: the port is not excited")]
    UndrivenPort(usize),
    #[error("trace needs at least 2 points, got {0}")]
    ShortTrace(usize),
    #[error("invalid trace: {0}")]
    InvalidTrace(String),
    #[error("VSWR must be >= 1, got {0}")]
    Vswr(f64),
    #[error("reflection magnitude must be in [0, 1), got {0}")]
    Gamma(f64),
    #[error("port map: {0}")]
    PortMap(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
