use thiserror::Error;

use crate::hilbert::QubitLabel;

pub type Result<T> = std::result::Result<T, Error>;

/// Broad failure class, used by the CLI to pick an exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// A caller broke an operation's precondition.
    Contract,
    /// A parameter lies outside the mathematical domain of an operation.
    Domain,
    /// An iterative method failed or produced non-finite values.
    Numerical,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("matrix is not Hermitian (max |A_jk - conj(A_kj)| = {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("Jacobi eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {residual:e})")]
    NoConvergence { sweeps: usize, residual: f64 },

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("cubic has a complex-conjugate root pair (discriminant {discriminant:e})")]
    ComplexRoots { discriminant: f64 },

    #[error("leading cubic coefficient is zero")]
    DegenerateCubic,

    #[error("label {0} is not part of the state")]
    UnknownLabel(QubitLabel),

    #[error("invalid subsystem selection: {0}")]
    InvalidSubset(String),

    #[error("invalid density matrix: {0}")]
    InvalidDensity(String),

    #[error("{0}")]
    Contract(String),

    #[error("{0}")]
    Domain(String),

    #[error("negativity is not unimodal on [{lo}, {hi}]: interior value {interior:.9} at x = {at:.9} lies below both ends")]
    NotUnimodal { lo: f64, hi: f64, at: f64, interior: f64 },

    #[error("sweep failed at {coords}: {source}")]
    SweepPoint {
        coords: String,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::NoConvergence { .. } | Error::NonFinite(_) | Error::NotUnimodal { .. } => {
                ErrorKind::Numerical
            }
            Error::ComplexRoots { .. } | Error::Domain(_) => ErrorKind::Domain,
            Error::SweepPoint { source, .. } => source.kind(),
            _ => ErrorKind::Contract,
        }
    }
}
