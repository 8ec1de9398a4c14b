//! Finite-dimensional algebras, augmented subalgebras, Lie actions and modules.

pub mod catalog;
mod fin;
mod lie;
mod module;
mod ops;
mod subalgebra;

pub use fin::FinAlgebra;
pub use lie::{LieAction, LieAlgebra};
pub use module::LeftModule;
pub use ops::{
    augmented_fixed_space, generated_subalgebra, induced_module, invariants, invariants_over_b,
    left_ideal, opposite, InducedModule,
};
pub use subalgebra::AugmentedSubalgebra;

/// A violated axiom of the input data. The display form names the axiom and
/// the first failing indices, e.g. `associativity(i=1,j=2,k=0)`.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ValidationError {
    #[error("associativity(i={i},j={j},k={k})")]
    Associativity { i: usize, j: usize, k: usize },
    #[error("unit(i={i})")]
    Unit { i: usize },
    #[error("antisymmetry(i={i},j={j},k={k})")]
    Antisymmetry { i: usize, j: usize, k: usize },
    #[error("jacobi(i={i},j={j},k={k})")]
    Jacobi { i: usize, j: usize, k: usize },
    #[error("lie-action(i={i},j={j})")]
    LieAction { i: usize, j: usize },
    #[error("subalgebra-empty")]
    SubalgebraEmpty,
    #[error("subalgebra-independence")]
    SubalgebraIndependence,
    #[error("subalgebra-unit")]
    SubalgebraUnit,
    #[error("subalgebra-closure(i={i},j={j})")]
    SubalgebraClosure { i: usize, j: usize },
    #[error("augmentation-unit")]
    AugmentationUnit,
    #[error("augmentation-multiplicative(i={i},j={j})")]
    AugmentationMultiplicative { i: usize, j: usize },
    #[error("module-unit")]
    ModuleUnit,
    #[error("module-action(i={i},j={j})")]
    ModuleAction { i: usize, j: usize },
    #[error("shape({0})")]
    Shape(String),
}

impl ValidationError {
    /// The axiom name without indices.
    pub fn axiom(&self) -> &'static str {
        match self {
            Self::Associativity { .. } => "associativity",
            Self::Unit { .. } => "unit",
            Self::Antisymmetry { .. } => "antisymmetry",
            Self::Jacobi { .. } => "jacobi",
            Self::LieAction { .. } => "lie-action",
            Self::SubalgebraEmpty => "subalgebra-empty",
            Self::SubalgebraIndependence => "subalgebra-independence",
            Self::SubalgebraUnit => "subalgebra-unit",
            Self::SubalgebraClosure { .. } => "subalgebra-closure",
            Self::AugmentationUnit => "augmentation-unit",
            Self::AugmentationMultiplicative { .. } => "augmentation-multiplicative",
            Self::ModuleUnit => "module-unit",
            Self::ModuleAction { .. } => "module-action",
            Self::Shape(_) => "shape",
        }
    }
}
