//! Exact sparse linear algebra over the rationals.

mod echelon;
mod scalar;
mod sparse;
mod subspace;

pub use echelon::{rref, rref_rightmost, Echelon, Rref};
pub use scalar::{
    format_scalar, int, one, parse_scalar, ratio, sign, zero, ParseScalarError, Scalar,
};
pub use sparse::{Matrix, SparseVec};
pub use subspace::{image_basis, kernel_basis, quotient, rank, solve, Quotient, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("basis vector {index} of the subspace is not contained in the ambient space")]
    NotASubspace { index: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}
