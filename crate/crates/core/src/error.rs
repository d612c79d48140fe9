//! Error taxonomy shared by every module.
//!
//! The variants map one-to-one onto the failure classes used throughout the
//! crate: shape mismatches, precondition violations on operator domains,
//! bad user-supplied parameters, insufficient quadrature resolution, fit
//! failures, and runtime numerical-invariant violations (the last of these
//! is what the CLI turns into exit code 3).

use thiserror::Error;

#[derive(Debug, Error)]
pub enum LabError {
    /// Shape/size inconsistency, or a dimension guard was exceeded.
    #[error("dimension error: {0}")]
    Dimension(String),

    /// Input is outside the mathematical domain of the operation
    /// (non-Hermitian where Hermitian is required, degenerate spectrum, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A user-facing parameter is out of range.
    #[error("parameter error: {0}")]
    Parameter(String),

    /// Quadrature/grid resolution is insufficient (Nyquist check failed).
    #[error("resolution error: {0}")]
    Resolution(String),

    /// Too little usable data for a least-squares fit.
    #[error("fit error: {0}")]
    Fit(String),

    /// The assembled generator has no fixed point within tolerance
    /// (signals an assembly bug, not a physics property).
    #[error("no fixed point: {0}")]
    NoFixedPoint(String),

    /// A numerical invariant (trace preservation, positivity, residual
    /// threshold) was violated mid-run.
    #[error("numerical invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, LabError>;
