//! Bar and Chevalley-Eilenberg resolutions, validation of user resolutions,
//! and comparison maps between resolutions.

mod bar;
mod ce;
mod lifting;
mod validate;

pub use bar::{
    bar_resolution, collapse_right_factor, induced_bar_complex, two_sided_bar_complex,
    two_sided_bar_complex_over_b,
};
pub use ce::{ce_complex, subsets_of_size};
pub use lifting::{defect, lift_chain_map, lift_homotopy};
pub use validate::{
    pad_with_contractible, periodic_resolution, validate_resolution, ResolutionReport,
};

use crate::algebra::ValidationError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ResolutionError {
    #[error("invalid Lie action: {0}")]
    InvalidLieAction(#[from] ValidationError),
    #[error("d^2 != 0 in degree {degree}")]
    NotAComplex { degree: usize },
    #[error("not a resolution of K at degree {degree}: {reason}")]
    NotAResolution { degree: usize, reason: String },
    #[error("no lift exists in degree {degree}")]
    NoLift { degree: usize },
    #[error("complex needs degree {needed} but stops at {available}")]
    TooShort { needed: usize, available: usize },
}

#[cfg(test)]
mod tests;
