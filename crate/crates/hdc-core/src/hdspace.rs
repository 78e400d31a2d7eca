//! The hyperdimensional space: seeded basis generation, feature-vector
//! encoding, and cosine similarity.
//!
//! An [`Encoder`] owns a `D x m` matrix of i.i.d. standard-normal entries,
//! generated entirely from a 64-bit seed. Column `i` is the i-th basis
//! vector: a length-`D` direction that, for large `D`, is nearly orthogonal
//! to every other column. Encoding maps a length-`m` feature vector into
//! the space either linearly (`F = Bx`) or through the nonlinear map
//! `F_d = cos(row_d . x + phase_d)` with phases uniform on `[0, 2pi)`.

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal, Uniform};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::Scalar;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

// Basis entries and phase offsets come from separate ChaCha streams of the
// same seed, so the basis is identical whether or not phases are consumed.
const BASIS_STREAM: u64 = 0;
const PHASE_STREAM: u64 = 1;

/// How a feature vector is mapped into the hyperspace.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EncoderMode {
    /// `F = Bx`: plain random projection. Keeps the classifier linear.
    Linear,
    /// `F_d = cos(row_d . x + phase_d)`: random-Fourier-style map. The
    /// default, since it separates classes a linear projection cannot.
    Nonlinear,
}

impl fmt::Display for EncoderMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EncoderMode::Linear => f.write_str("linear"),
            EncoderMode::Nonlinear => f.write_str("nonlinear"),
        }
    }
}

impl FromStr for EncoderMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "linear" => Ok(EncoderMode::Linear),
            "nonlinear" => Ok(EncoderMode::Nonlinear),
            other => Err(Error::InvalidArgument(format!(
                "unknown encoder mode {other:?} (expected \"linear\" or \"nonlinear\")"
            ))),
        }
    }
}

impl EncoderMode {
    pub(crate) fn code(self) -> u8 {
        match self {
            EncoderMode::Linear => 0,
            EncoderMode::Nonlinear => 1,
        }
    }

    pub(crate) fn from_code(code: u8) -> Option<EncoderMode> {
        match code {
            0 => Some(EncoderMode::Linear),
            1 => Some(EncoderMode::Nonlinear),
            _ => None,
        }
    }
}

/// A point in the hyperspace: dense, fixed length `D`, all entries finite.
#[derive(Debug, Clone, PartialEq)]
pub struct Hypervector {
    values: Vec<Scalar>,
}

impl Hypervector {
    /// Wrap raw values, rejecting NaN/Inf entries.
    pub fn new(values: Vec<Scalar>) -> Result<Self> {
        if let Some(index) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite {
                what: "hypervector",
                index,
            });
        }
        Ok(Hypervector { values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Scalar> {
        self.values
    }

    /// Euclidean norm, accumulated in f64.
    pub fn norm(&self) -> f64 {
        self.values
            .iter()
            .map(|&v| {
                let v = v as f64;
                v * v
            })
            .sum::<f64>()
            .sqrt()
    }
}

/// A raw input sample: the concatenated windowed channel values, length `m`.
#[derive(Debug, Clone, PartialEq)]
pub struct FeatureVector {
    values: Vec<Scalar>,
}

impl FeatureVector {
    pub fn new(values: Vec<Scalar>) -> Self {
        FeatureVector { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Scalar> {
        self.values
    }
}

impl From<Vec<Scalar>> for FeatureVector {
    fn from(values: Vec<Scalar>) -> Self {
        FeatureVector::new(values)
    }
}

/// Digest binding a model to the encoder whose hypervectors trained it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EncoderFingerprint(u64);

impl EncoderFingerprint {
    pub fn as_u64(self) -> u64 {
        self.0
    }
}

impl fmt::Display for EncoderFingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:016x}", self.0)
    }
}

/// The generation parameters of an encoder. Enough to rebuild it exactly
/// and to fingerprint it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EncoderMeta {
    pub input_dim: usize,
    pub dimension: usize,
    pub seed: u64,
    pub mode: EncoderMode,
}

impl EncoderMeta {
    pub fn fingerprint(&self) -> EncoderFingerprint {
        // FNV-1a over a fixed serialization of the parameters.
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        let mut eat = |bytes: &[u8]| {
            for &b in bytes {
                h ^= b as u64;
                h = h.wrapping_mul(0x100_0000_01b3);
            }
        };
        eat(b"hdc-encoder-v1");
        eat(&(self.dimension as u64).to_le_bytes());
        eat(&(self.input_dim as u64).to_le_bytes());
        eat(&self.seed.to_le_bytes());
        eat(&[self.mode.code()]);
        EncoderFingerprint(h)
    }

    /// Regenerate the encoder these parameters describe.
    pub fn build(&self) -> Result<Encoder> {
        Encoder::generate(self.input_dim, self.dimension, self.seed, self.mode)
    }
}

/// Seeded projection from feature space into the hyperspace.
///
/// Immutable after construction and safe to share across threads; `encode`
/// is a pure function of the encoder and its input.
#[derive(Debug, Clone)]
pub struct Encoder {
    /// Row-major `dimension x input_dim`. Row `d` is what gets dotted with
    /// the input to produce output coordinate `d`; column `i` is the i-th
    /// basis vector of the space.
    basis: Vec<Scalar>,
    /// Length `dimension`; consumed only in nonlinear mode.
    phases: Vec<Scalar>,
    input_dim: usize,
    dimension: usize,
    seed: u64,
    mode: EncoderMode,
}

impl Encoder {
    /// Generate the seeded basis. Deterministic in `(m, d, seed, mode)`:
    /// the same arguments always produce a bit-identical encoder.
    pub fn generate(m: usize, d: usize, seed: u64, mode: EncoderMode) -> Result<Encoder> {
        if m == 0 || d == 0 {
            return Err(Error::InvalidArgument(format!(
                "encoder dimensions must be positive (m={m}, d={d})"
            )));
        }

        let mut basis_rng = ChaCha8Rng::seed_from_u64(seed);
        basis_rng.set_stream(BASIS_STREAM);
        let normal = StandardNormal;
        let basis: Vec<Scalar> = (0..d * m)
            .map(|_| {
                let v: f64 = normal.sample(&mut basis_rng);
                v as Scalar
            })
            .collect();

        let mut phase_rng = ChaCha8Rng::seed_from_u64(seed);
        phase_rng.set_stream(PHASE_STREAM);
        let uniform = Uniform::new(0.0f64, std::f64::consts::TAU);
        let phases: Vec<Scalar> = (0..d)
            .map(|_| uniform.sample(&mut phase_rng) as Scalar)
            .collect();

        Ok(Encoder {
            basis,
            phases,
            input_dim: m,
            dimension: d,
            seed,
            mode,
        })
    }

    /// Build an encoder from explicit matrices. Used to inject known bases
    /// in tests and for custom projections; `seed` is recorded verbatim.
    pub fn from_parts(
        basis: Vec<Scalar>,
        phases: Vec<Scalar>,
        m: usize,
        d: usize,
        seed: u64,
        mode: EncoderMode,
    ) -> Result<Encoder> {
        if m == 0 || d == 0 {
            return Err(Error::InvalidArgument(format!(
                "encoder dimensions must be positive (m={m}, d={d})"
            )));
        }
        if basis.len() != d * m {
            return Err(Error::DimensionMismatch {
                expected: d * m,
                got: basis.len(),
            });
        }
        if phases.len() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: phases.len(),
            });
        }
        if let Some(index) = basis.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite {
                what: "basis",
                index,
            });
        }
        if let Some(index) = phases.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite {
                what: "phases",
                index,
            });
        }
        Ok(Encoder {
            basis,
            phases,
            input_dim: m,
            dimension: d,
            seed,
            mode,
        })
    }

    pub fn input_dim(&self) -> usize {
        self.input_dim
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn mode(&self) -> EncoderMode {
        self.mode
    }

    pub fn meta(&self) -> EncoderMeta {
        EncoderMeta {
            input_dim: self.input_dim,
            dimension: self.dimension,
            seed: self.seed,
            mode: self.mode,
        }
    }

    pub fn fingerprint(&self) -> EncoderFingerprint {
        self.meta().fingerprint()
    }

    /// The i-th basis vector: column `i` of the matrix, length `dimension`.
    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        assert!(i < self.input_dim, "basis vector index out of range");
        (0..self.dimension)
            .map(|d| self.basis[d * self.input_dim + i])
            .collect()
    }

    /// Map a feature vector into the hyperspace.
    pub fn encode(&self, x: &FeatureVector) -> Result<Hypervector> {
        if x.len() != self.input_dim {
            return Err(Error::DimensionMismatch {
                expected: self.input_dim,
                got: x.len(),
            });
        }
        if let Some(index) = x.values().iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite {
                what: "feature vector",
                index,
            });
        }

        let xs = x.values();
        let mut out = Vec::with_capacity(self.dimension);
        for d in 0..self.dimension {
            let row = &self.basis[d * self.input_dim..(d + 1) * self.input_dim];
            let mut acc = 0.0f64;
            for (&w, &xi) in row.iter().zip(xs) {
                acc += w as f64 * xi as f64;
            }
            let v = match self.mode {
                EncoderMode::Linear => acc,
                EncoderMode::Nonlinear => (acc + self.phases[d] as f64).cos(),
            };
            out.push(v as Scalar);
        }
        // Catches overflow of the linear projection when cast to Scalar.
        Hypervector::new(out)
    }

    /// Encode a batch of samples. Runs over samples in parallel when the
    /// `parallel` feature is enabled; output order always matches input
    /// order and every element is identical to a sequential `encode` call.
    pub fn encode_batch(&self, xs: &[FeatureVector]) -> Result<Vec<Hypervector>> {
        #[cfg(feature = "parallel")]
        {
            xs.par_iter().map(|x| self.encode(x)).collect()
        }
        #[cfg(not(feature = "parallel"))]
        {
            xs.iter().map(|x| self.encode(x)).collect()
        }
    }
}

/// Cosine similarity between two hypervectors, accumulated in f64 and
/// clamped to `[-1, 1]`.
///
/// Errors instead of silently returning anything when either vector has
/// zero norm; the caller decides the policy.
pub fn similarity(h1: &Hypervector, h2: &Hypervector) -> Result<f64> {
    cosine(h1.values(), h2.values())
}

/// Slice-level cosine used by both `similarity` and the class model.
pub(crate) fn cosine(a: &[Scalar], b: &[Scalar]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            expected: a.len(),
            got: b.len(),
        });
    }
    let mut dot = 0.0f64;
    let mut na = 0.0f64;
    let mut nb = 0.0f64;
    for (&x, &y) in a.iter().zip(b) {
        let x = x as f64;
        let y = y as f64;
        dot += x * y;
        na += x * x;
        nb += y * y;
    }
    if na == 0.0 || nb == 0.0 {
        return Err(Error::ZeroNorm);
    }
    Ok((dot / (na.sqrt() * nb.sqrt())).clamp(-1.0, 1.0))
}
