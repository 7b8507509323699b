use crate::scalar::{FieldSpec, Scalar};

/// Errors produced by scalar, sequence and algebra operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("operands live in different fields: {left} vs {right}")]
    FieldMismatch { left: FieldSpec, right: FieldSpec },

    #[error("modulus {q} is not an odd prime >= 3")]
    InvalidModulus { q: u64 },

    #[error("inversion of zero in {field}")]
    InversionOfZero { field: FieldSpec },

    #[error("quadratic ring elements have different parameters: l = {left} vs l = {right}")]
    QuadRingMismatch { left: u64, right: u64 },

    #[error("coefficients ({a}, {b}) violate the half-integer closure a = l*b (mod 2) for l = {l}")]
    QuadParity { l: u64, a: String, b: String },

    #[error("element is not invertible: norm = {norm}")]
    NotInvertible { norm: Scalar },

    #[error("the zero element is excluded from this predicate")]
    ZeroElement,

    #[error("gamma parameters do not match the required (-1, ..., -1, v) pattern")]
    GammaPattern,

    #[error("{0}")]
    InvalidArgument(String),

    #[error("elements belong to different algebras")]
    AlgebraMismatch,

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
