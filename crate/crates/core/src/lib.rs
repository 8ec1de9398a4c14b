//! Graded Hecke algebras `Hk^*(A,B)` of augmented subalgebra pairs, BRST
//! cohomology, Ext/Tor and Dirac reduction for finite-dimensional algebras
//! over the rationals.

pub mod algebra;
pub mod brst;
pub mod complexes;
pub mod hecke;
pub mod input;
pub mod linalg;
pub mod reduction;
pub mod resolutions;

pub use linalg::{Matrix, Scalar, SparseVec, Subspace};
