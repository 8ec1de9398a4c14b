//! Chain complexes, free A-complexes and their endomorphism dg algebras.

mod amatrix;
mod chain;
mod dga;
mod end;
mod free;
mod modules;
mod transport;

pub use amatrix::AMatrix;
pub use chain::{ChainComplex, CochainComplex, Homology};
pub use dga::{
    cohomology_algebra, cohomology_groups, product_table, CohomologyAlgebra, DgAlgebra,
    GradedAlgebraTable, ProductConvention,
};
pub use end::{build_end_complex, Block, CochainClass, EndComplex, Layout};
pub use free::FreeAComplex;
pub use modules::{hom_cochain, hom_complex, tensor_complex};
pub use transport::{
    chain_map_transport, conjugate, find_chain_map_failure, find_homotopy_failure, GradedMap,
    TransportReport,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ComplexError {
    #[error("degree {degree} is outside the computed range")]
    DegreeOutOfRange { degree: i64 },
    #[error("composition needs source degree {needed} but the window ends at {window}")]
    WindowUnderflow { needed: usize, window: usize },
    #[error("source complex needs degree {needed} but stops at {available}")]
    SourceTooShort { needed: usize, available: usize },
    #[error("cohomology is unstable in degree {degree} at window {window}")]
    UnstableTruncation { degree: i64, window: usize },
    #[error("product of cocycles in degrees ({left},{right}) is not a cocycle")]
    ProductNotClosed { left: i64, right: i64 },
    #[error("image of a cocycle in degree {degree} is not a cocycle")]
    NotACocycle { degree: i64 },
    #[error("not a homotopy equivalence: {0}")]
    NotAHomotopyEquivalence(String),
    #[error("malformed complex: {0}")]
    Shape(String),
}

#[cfg(test)]
mod tests;
