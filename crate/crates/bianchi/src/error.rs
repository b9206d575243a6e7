//! Error types shared across the library.

use thiserror::Error;

use crate::scalar::Scalar;

/// Errors raised by bracket construction, classification and the group action.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A change of basis must be invertible.
    #[error("matrix is singular: determinant is zero")]
    Singular,

    /// The bracket is not a Lie bracket. Carries the three components of the
    /// Jacobi obstruction evaluated on the basis, so callers can report
    /// exactly how far the input is from a Lie algebra.
    #[error("Jacobi identity fails: J(e1,e2,e3) = ({0}, {1}, {2})")]
    JacobiViolation(Scalar, Scalar, Scalar),

    /// Complex data supplied to a real-mode computation, or vice versa.
    #[error("field mode mismatch: {0}")]
    ModeMismatch(String),

    /// A type label that does not exist over the requested field, or a family
    /// parameter outside the range the family allows.
    #[error("type not valid for this field: {0}")]
    TypeMode(String),

    /// An operation was called outside its domain.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Malformed input text: bad JSON, bad scalar literal, out-of-range or
    /// duplicate indices, unknown schema version.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
