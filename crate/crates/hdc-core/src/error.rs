//! Crate-wide error type.

use std::path::PathBuf;

use thiserror::Error;

/// Errors surfaced by every subsystem of this crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("non-finite value in {what} at index {index}")]
    NonFinite { what: &'static str, index: usize },

    #[error("zero-norm vector")]
    ZeroNorm,

    #[error("empty dataset")]
    EmptyDataset,

    #[error("unknown class label: {0}")]
    UnknownClass(String),

    #[error("window length {n} exceeds series length {len}")]
    WindowTooLong { n: usize, len: usize },

    #[error("degenerate deviation distribution: standard deviation is zero")]
    DegenerateDistribution,

    #[error("class {0} has no samples")]
    EmptyClass(&'static str),

    #[error("class {label} has {count} sample(s); stratified split needs at least 2")]
    Stratification { label: &'static str, count: usize },

    #[error("model/encoder mismatch: model fingerprint {model}, encoder fingerprint {encoder}")]
    EncoderMismatch { model: String, encoder: String },

    #[error("platform energy counter unavailable: {0}")]
    CapabilityUnavailable(String),

    #[error("power trace does not overlap the measured interval")]
    InsufficientSamples,

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("format error: {0}")]
    Format(String),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
