use thiserror::Error;

/// Errors produced by matrix construction, spectral factorization and
/// swarm evolution.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The factor is zero, so the scaling matrix in the factorization is
    /// singular and no spectral operation is defined.
    #[error("factor must be nonzero for spectral operations")]
    DegenerateFactor,

    /// A matrix or state with fewer than two entries was requested.
    #[error("size must be at least 2, got {0}")]
    TooSmall(usize),

    /// Vector or matrix dimensions do not agree.
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    /// Two factor circulants with different factors cannot be combined.
    #[error("operands carry different factors")]
    FactorMismatch,

    /// A NaN or infinite component was passed to a public constructor.
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    /// The spectrum contains (numerically) vanishing modes, listed by index.
    #[error("singular spectrum: modes {0:?} vanish")]
    SingularSpectrum(Vec<usize>),

    /// The dominant-modulus modes are tied, listed by index.
    #[error("dominant modes are tied: {0:?}")]
    MultiModal(Vec<usize>),

    /// A spectrum with no modes was supplied.
    #[error("empty spectrum")]
    EmptySpectrum,

    /// The tie tolerance is outside (0, 1e-3].
    #[error("tie tolerance {0} outside (0, 1e-3]")]
    InvalidTieTolerance(f64),

    /// The forward interaction weight is zero, so the factor is undefined.
    #[error("forward weight must be nonzero")]
    ZeroForwardWeight,

    /// A documented precondition of the operation does not hold.
    #[error("{0}")]
    PreconditionFailed(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
