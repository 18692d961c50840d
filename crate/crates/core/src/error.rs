use thiserror::Error;

/// Errors raised by the numerical routines and the command-line front end.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("length {0} is not a power of two")]
    NotPowerOfTwo(usize),

    #[error("sequence length must be at least 1")]
    EmptySequence,

    #[error("non-finite value encountered in {0}")]
    NonFinite(&'static str),

    #[error("grid needs at least {required} points, got {found}")]
    GridTooSmall { required: usize, found: usize },

    #[error("grid must have an odd number of points, got {0}")]
    GridNotOdd(usize),

    #[error("grids do not match")]
    GridMismatch,

    #[error("invalid quadrature grid: {0}")]
    InvalidGrid(&'static str),

    #[error("1F1 series with b = {b} hits a pole before terminating")]
    HypergeometricPole { b: f64 },

    #[error("1F1 series did not converge within {0} terms")]
    SeriesNotConverged(usize),

    #[error("epsilon must lie in (0, 1), got {0}")]
    EpsilonOutOfRange(f64),

    #[error("normalization constant overflows for n = {0}")]
    NormOverflow(u32),

    #[error("integrals are defined per branch; got indices {0} and {1}")]
    BranchMismatch(i64, i64),

    #[error("matrix is not symmetric (max asymmetry {0:e})")]
    NotSymmetric(f64),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error(
        "Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal {off_diagonal:e})"
    )]
    NoConvergence { sweeps: usize, off_diagonal: f64 },

    #[error("eigenvalue lies {0:e} away from both +1 and -1")]
    NotAnInvolution(f64),

    #[error("eigenvalue must be +1 or -1, got {0}")]
    InvalidEigenvalue(f64),

    #[error("zero-norm vector")]
    ZeroVector,

    #[error("vector family is empty")]
    EmptyFamily,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
