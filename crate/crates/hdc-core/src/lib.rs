//! Hyperdimensional computing (HDC) engine for classifying multivariate
//! sensor time-series into quality categories, plus the surrounding
//! machinery needed to benchmark it honestly: a windowing data pipeline,
//! classification metrics, an energy/time metering harness with pluggable
//! power sources, a from-scratch MLP baseline, and a fleet-scale annual
//! energy projection.
//!
//! The crate is organized by subsystem:
//!
//! - [`hdspace`] — seeded random basis, feature-vector encoding, cosine
//!   similarity
//! - [`model`] — class hypervectors: bundling, mispredict-driven retraining,
//!   argmax inference, binary persistence
//! - [`pipeline`] — recordings, n-gram windowing, z-score labeling, class
//!   balancing, stratified splits, synthetic data, CSV/manifest I/O
//! - [`eval`] — confusion matrix and accuracy/precision/recall/F1
//! - [`metering`] — wall-clock + integrated-energy measurement and workload
//!   comparison
//! - [`baseline`] — minimal gradient-trained MLP used as the comparison
//!   counterpart
//! - [`projection`] — annual fleet energy model, savings and CO2e conversion
//!
//! Batch operations (encoding, evaluation) run data-parallel over samples
//! when the `parallel` feature is enabled (default) and fall back to
//! sequential loops otherwise. Per-sample arithmetic is identical either
//! way, so results do not depend on the feature.

pub mod baseline;
pub mod error;
pub mod eval;
pub mod hdspace;
pub mod label;
pub mod metering;
pub mod model;
pub mod pipeline;
pub mod projection;
pub mod seeds;

pub use error::{Error, Result};
pub use label::Quality;

/// Element type of hypervectors and feature vectors.
///
/// 32-bit by default; the `double-precision` feature switches the whole
/// crate to 64-bit elements. Similarity and other reductions always
/// accumulate in f64 regardless.
#[cfg(not(feature = "double-precision"))]
pub type Scalar = f32;

/// Element type of hypervectors and feature vectors.
#[cfg(feature = "double-precision")]
pub type Scalar = f64;
