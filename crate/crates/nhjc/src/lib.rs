//! Closed-form spectral theory of two non-Hermitian Jaynes-Cummings models.
//!
//! The generic Hamiltonian couples one bosonic mode to one qubit through a
//! rotating-wave interaction in which the mode frequency, the qubit splitting
//! and the coupling strength may all carry imaginary (loss) parts.  The U(1)
//! excitation symmetry splits the problem into 2x2 blocks, so everything here
//! is exact: eigenvalues, eigenvectors, exceptional points, quantum Fisher
//! information, real-space spin textures and their winding numbers.
//!
//! Modules:
//! - [`model`]: parameters, 2x2 blocks and the closed-form eigensolutions.
//! - [`symmetry`]: exceptional points, phase classification, order parameters.
//! - [`qfi`]: quantum Fisher information, closed form and numeric overlap form.
//! - [`texture`]: oscillator wavefunctions, spin textures, winding numbers.
//! - [`oracle`]: independent dense-diagonalization cross-checks.
//! - [`sweep`]: parameter sweeps, figure presets and CSV/JSONL output.

pub mod model;
pub mod oracle;
pub mod qfi;
pub mod sweep;
pub mod symmetry;
pub mod texture;

use std::path::PathBuf;

pub use model::{Branch, EigenSolution, LevelIndex, ModelKind, ModelParams, ParamName};

/// Errors produced anywhere in the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("parameter {param} is not meaningful for model kind {kind:?}")]
    ParamKindMismatch { param: ParamName, kind: ModelKind },
    #[error("invalid level: {0}")]
    InvalidLevel(String),
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("quantity diverges at the exceptional point (lambda = lambda_EP = {0})")]
    Divergence(f64),
    #[error("finite-difference step {step} crosses the exceptional point at {lambda_ep}")]
    StepCrossesEp { step: f64, lambda_ep: f64 },
    #[error("finite-difference step {0} is below the round-off floor")]
    StepTooSmall(f64),
    #[error("state has zero norm")]
    ZeroNorm,
    #[error("eigensolver failed: {0}")]
    Eigensolver(String),
    #[error("eigenvector matching is ambiguous near the exceptional point: {0}")]
    AmbiguousMatch(String),
    #[error("not enough data points: {0}")]
    InsufficientData(String),
    #[error("invalid sweep spec: {0}")]
    InvalidSpec(String),
    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    /// Process exit code category: 2 validation, 3 numerical, 4 i/o.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidParams(_)
            | Error::ParamKindMismatch { .. }
            | Error::InvalidLevel(_)
            | Error::InvalidGrid(_)
            | Error::InvalidSpec(_)
            | Error::InsufficientData(_) => 2,
            Error::Divergence(_)
            | Error::StepCrossesEp { .. }
            | Error::StepTooSmall(_)
            | Error::ZeroNorm
            | Error::Eigensolver(_)
            | Error::AmbiguousMatch(_) => 3,
            Error::Io { .. } => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
