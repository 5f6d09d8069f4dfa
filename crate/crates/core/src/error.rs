use thiserror::Error;

/// Errors raised by the algebra kernel, the operator model and the classifiers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("polynomials live in different variable universes")]
    UniverseMismatch,

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("total degree {degree} exceeds the configured cap {cap}")]
    DegreeCapExceeded { degree: u32, cap: u32 },

    #[error("matrix is not skew-symmetric")]
    NotSkewSymmetric,

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("invalid signed permutation: {0}")]
    InvalidPermutation(String),

    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("operator has non-constant coefficients; run the translation check first")]
    VariableCoefficients,

    #[error("phase must be affine in (t, x), found degree {0}")]
    PhaseDegree(u32),

    #[error("phase may only depend on t and x")]
    PhaseVariables,

    #[error("operator is zero: at least one top-order coefficient must be nonzero")]
    ZeroOperator,

    #[error("symbol may only depend on t, x, tau and xi")]
    SymbolVariables,

    #[error("lambda must be nonzero here")]
    LambdaZero,

    #[error("operator is not rotation invariant")]
    NotRotationInvariant,

    #[error("normalization needs an accepted order-2 verdict")]
    NotAccepted,

    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("spatial index {index} exceeds dimension n = {n}")]
    IndexExceedsDimension { index: usize, n: usize },

    #[error("dimension cannot be inferred; pass n explicitly")]
    DimensionUnknown,

    #[error("invalid number `{0}`")]
    InvalidNumber(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
