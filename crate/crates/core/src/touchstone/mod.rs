//! N-port S-parameter networks and Touchstone v1.0 files.

mod network;
mod parse;
mod portmap;
mod write;

pub use network::{NPortNetwork, PortLabel, SMatrix};
pub use parse::{parse_touchstone, ports_from_path, read_touchstone};
pub use portmap::{parse_port_map, write_port_map};
pub use write::{write_touchstone, DataFormat};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum TouchstoneError {
    #[error("I/O error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("input is not valid UTF-8/ASCII text")]
    Encoding,
    #[error("line {line}: malformed option line: {msg}")]
    OptionLine { line: usize, msg: String },
    #[error("line {line}: unsupported parameter type `{param}` (only S-parameters are supported)")]
    Unsupported { line: usize, param: String },
    #[error("line {line}: frequency record has {found} tokens, expected {expected} (1 + 2*N^2 with N = {ports})")]
    TokenCount { line: usize, found: usize, expected: usize, ports: usize },
    #[error("line {line}: frequency {freq} Hz does not increase (previous {prev} Hz)")]
    NonMonotonic { line: usize, freq: f64, prev: f64 },
    #[error("line {line}: cannot parse number `{token}`")]
    BadNumber { line: usize, token: String },
    #[error("cannot infer port count from `{0}` (expected a .sNp extension)")]
    PortCount(String),
    #[error("port map line {line}: {msg}")]
    PortMap { line: usize, msg: String },
    #[error("invalid network: {0}")]
    Invalid(String),
}
