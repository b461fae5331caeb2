//! Error type shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Dimensions or lengths do not line up.
    #[error("shape error: {0}")]
    Shape(String),

    /// Operands live over different fields.
    #[error("field mismatch: {0}")]
    FieldMismatch(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A structure-constant table violates a Lie axiom.
    #[error("algebra axiom violation: {reason} at basis triple ({i},{j},{k})")]
    AxiomViolation {
        reason: String,
        i: usize,
        j: usize,
        k: usize,
    },

    /// Quotient requested by a subspace that is not an ideal.
    #[error("not an ideal: [e_{basis_index}, v] escapes the subspace for v = {vector}")]
    NotAnIdeal { basis_index: usize, vector: String },

    /// Operation requires a centerless algebra.
    #[error("algebra has nonzero center; central witness {witness}")]
    NotCenterless { witness: String },

    /// Operation requires a perfect algebra.
    #[error("algebra is not perfect: [g,g] has dimension {derived_dim} < {dim}")]
    NotPerfect { derived_dim: usize, dim: usize },

    /// The supplied matrix is not a derivation of the algebra.
    #[error("matrix is not a derivation: Leibniz identity fails on basis pair ({i},{j})")]
    NotADerivation { i: usize, j: usize },

    /// Outer-derivation construction rejected: the input is inner.
    #[error("derivation is inner: equals ad of {vector}")]
    DerivationIsInner { vector: String },

    /// Outer-derivation construction rejected: a commutator leaves the inner ideal.
    #[error("[D, d_{basis_index}] is not an inner derivation")]
    BracketEscapesInner { basis_index: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    /// A mathematically impossible state; indicates a bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
