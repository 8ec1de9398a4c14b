//! The graded Hecke algebra `Hk^*(A,B) = H^*(End_A(A ⊗_B X))`, its direct
//! degree-zero model, Ext/Tor, and the cross-checks relating them.

mod structure;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::algebra::{AugmentedSubalgebra, LieAction, ValidationError};
use crate::complexes::{
    cohomology_algebra, cohomology_groups, CohomologyAlgebra, ComplexError, EndComplex,
    FreeAComplex, GradedAlgebraTable,
};
use crate::resolutions::{ce_complex, induced_bar_complex, validate_resolution, ResolutionError};

pub use structure::{
    bar_model_consistency, ce_tor, compare_hk0, ext_a_selfext, ext_b, freeness_certificate,
    hk0_direct, parent_as_right_module, structure_triangle, tor, tor_of_right_module,
    BarModelReport, ExtReport, FreenessCertificate, Hk0Comparison, Hk0Direct, TorReport,
    TriangleReport,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HeckeError {
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Resolution(#[from] ResolutionError),
    #[error(transparent)]
    Validation(#[from] ValidationError),
    #[error("cohomology in degree {degree} changes between windows {window} and {next}; raise -L")]
    UnstableTruncation {
        degree: i64,
        window: usize,
        next: usize,
    },
}

/// The resolution `X` of `K` over `B` used to build `A ⊗_B X`.
#[derive(Clone, Debug)]
pub enum Resolution {
    /// Normalized bar resolution of the pair.
    Bar(AugmentedSubalgebra),
    /// `A ⊗ Λ(g)` for a Lie action `ρ: g -> A` (finite, no truncation).
    Ce(LieAction),
    /// A user-supplied free complex over `B`, validated before use.
    File {
        pair: AugmentedSubalgebra,
        complex: FreeAComplex,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResolutionTag {
    Bar,
    Ce,
    File,
}

impl fmt::Display for ResolutionTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Bar => "bar",
            Self::Ce => "ce",
            Self::File => "file",
        })
    }
}

impl Resolution {
    pub fn tag(&self) -> ResolutionTag {
        match self {
            Self::Bar(_) => ResolutionTag::Bar,
            Self::Ce(_) => ResolutionTag::Ce,
            Self::File { .. } => ResolutionTag::File,
        }
    }

    /// `A ⊗_B X` in degrees `0..=len` (or all degrees when finite).
    pub fn induced_complex(&self, len: usize) -> Result<FreeAComplex, HeckeError> {
        match self {
            Self::Bar(b) => Ok(induced_bar_complex(b, len)),
            Self::Ce(act) => Ok(ce_complex(act)?),
            Self::File { pair, complex } => {
                if !complex.is_bounded() && complex.top() < len {
                    return Err(ResolutionError::TooShort {
                        needed: len,
                        available: complex.top(),
                    }
                    .into());
                }
                let x = complex.truncate(len + 1);
                Ok(x.map_entries(pair.parent().clone(), |v| pair.include(v)))
            }
        }
    }

    fn is_finite(&self) -> bool {
        match self {
            Self::Bar(b) => b.kernel_dim() == 0,
            Self::Ce(_) => true,
            Self::File { complex, .. } => complex.is_bounded(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HeckeOptions {
    /// Source window `L`.
    pub window: usize,
    pub min_degree: i64,
    pub max_degree: i64,
    /// Number of consecutive windows `L, L+1, ...` whose dims must agree.
    pub stability_passes: usize,
}

impl Default for HeckeOptions {
    fn default() -> Self {
        Self {
            window: 4,
            min_degree: 0,
            max_degree: 3,
            stability_passes: 2,
        }
    }
}

#[derive(Clone, Debug)]
pub struct HeckeResult {
    /// Cohomology algebra at window `L`, composition product.
    pub table: GradedAlgebraTable,
    pub resolution_used: ResolutionTag,
    pub window: usize,
    /// Degree -> dims agree across all compared windows.
    pub stability: BTreeMap<i64, bool>,
    pub dims_by_window: BTreeMap<usize, BTreeMap<i64, usize>>,
    pub tor: Option<TorReport>,
    /// Set when the Tor-vanishing hypothesis fails, so the structure identities are unavailable.
    pub advisory: bool,
    pub end: EndComplex,
    pub cohomology: CohomologyAlgebra,
}

impl HeckeResult {
    pub fn dims(&self) -> Vec<usize> {
        self.table
            .degrees
            .iter()
            .map(|&n| self.table.dim(n))
            .collect()
    }

    pub fn first_unstable(&self) -> Option<i64> {
        self.stability.iter().find(|(_, &ok)| !ok).map(|(&n, _)| n)
    }

    pub fn require_stable(&self) -> Result<(), HeckeError> {
        match self.first_unstable() {
            None => Ok(()),
            Some(degree) => Err(HeckeError::UnstableTruncation {
                degree,
                window: self.window,
                next: self.window + 1,
            }),
        }
    }
}

/// Compute `Hk^n` for `n` in `min_degree..=max_degree` on window `L`, and
/// compare dimensions on windows `L+1, ..., L+passes-1`.
pub fn hecke_algebra(
    resolution: &Resolution,
    opts: &HeckeOptions,
) -> Result<HeckeResult, HeckeError> {
    let degrees: Vec<i64> = (opts.min_degree..=opts.max_degree).collect();
    let extra = (1 - opts.min_degree).max(1) as usize;
    if let Resolution::File { pair, complex } = resolution {
        let needed = opts.window + opts.stability_passes.max(1) - 1 + extra;
        validate_resolution(complex, pair, needed)?;
    }
    let finite = resolution.is_finite();
    let passes = if finite {
        1
    } else {
        opts.stability_passes.max(1)
    };
    let mut dims_by_window = BTreeMap::new();
    let mut primary = None;
    for k in 0..passes {
        let w = opts.window + k;
        let source = Arc::new(resolution.induced_complex(w + extra)?);
        let end = EndComplex::new(source, w)?;
        if k == 0 {
            let h = cohomology_algebra(&end, &degrees)?;
            dims_by_window.insert(end.window(), h.table.dims.clone());
            primary = Some((end, h));
        } else {
            let groups = cohomology_groups(&end, &degrees)?;
            dims_by_window.insert(
                end.window(),
                groups.iter().map(|(n, g)| (*n, g.dim())).collect(),
            );
        }
    }
    let (end, cohomology) = primary.expect("at least one pass");
    let stability = degrees
        .iter()
        .map(|n| {
            let mut values = dims_by_window
                .values()
                .map(|d| d.get(n).copied().unwrap_or(0));
            let first = values.next();
            (*n, values.all(|v| Some(v) == first))
        })
        .collect();
    let tor = match resolution {
        Resolution::Bar(b) | Resolution::File { pair: b, .. } => Some(tor(b, opts.window)),
        Resolution::Ce(act) => Some(ce_tor(act)?),
    };
    let advisory = tor.as_ref().is_some_and(|t| !t.vanishes);
    Ok(HeckeResult {
        table: cohomology.table.clone(),
        resolution_used: resolution.tag(),
        window: end.window(),
        stability,
        dims_by_window,
        tor,
        advisory,
        end,
        cohomology,
    })
}
