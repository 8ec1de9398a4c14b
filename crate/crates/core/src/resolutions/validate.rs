use super::ResolutionError;
use crate::algebra::AugmentedSubalgebra;
use crate::complexes::{AMatrix, FreeAComplex};
use crate::linalg::{Matrix, SparseVec};

/// Outcome of [`validate_resolution`]: homology dimensions in degrees `0..L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionReport {
    pub homology_dims: Vec<usize>,
}

/// Left multiplication by the `B`-basis element `alpha` on `B ⊗ F` (`fiber` copies).
fn left_action(b: &AugmentedSubalgebra, alpha: usize, fiber: usize) -> Matrix {
    let alg = b.algebra();
    let nb = alg.dim();
    let cols: Vec<SparseVec> = (0..fiber * nb)
        .map(|k| {
            let (j, g) = (k / nb, k % nb);
            alg.basis_product(alpha, g).shifted(j * nb)
        })
        .collect();
    Matrix::from_columns(fiber * nb, &cols)
}

/// Check that `x` (a free complex over `B`) resolves `K`: `d^2 = 0`, `d` is
/// `B`-linear, `H_0 ≅ K` with `B` acting through `ε`, and `H_s = 0` for
/// `1 <= s <= L - 1`. The error names the first failing degree.
pub fn validate_resolution(
    x: &FreeAComplex,
    b: &AugmentedSubalgebra,
    l: usize,
) -> Result<ResolutionReport, ResolutionError> {
    if x.algebra().as_ref() != b.algebra().as_ref() {
        return Err(ResolutionError::NotAResolution {
            degree: 0,
            reason: "complex is not over B".into(),
        });
    }
    if !x.is_bounded() && x.top() < l {
        return Err(ResolutionError::TooShort {
            needed: l,
            available: x.top(),
        });
    }
    let nb = b.dim();
    let fail = |degree: usize, reason: &str| {
        Err(ResolutionError::NotAResolution {
            degree,
            reason: reason.into(),
        })
    };
    let top = x.top().min(l);
    // extend a bounded complex by zeros up to L
    let xs = (0..=l).map(|s| x.fiber_dim(s)).collect::<Vec<_>>();
    let d = |s: usize| -> Matrix {
        if s >= 1 && s <= top {
            x.differential(s).to_scalar_matrix(b.algebra())
        } else {
            Matrix::zero(
                xs.get(s.wrapping_sub(1)).copied().unwrap_or(0) * nb,
                xs.get(s).copied().unwrap_or(0) * nb,
            )
        }
    };
    let mut dims = Vec::with_capacity(l);
    for s in 0..l {
        let ds = d(s);
        let ds1 = d(s + 1);
        if s >= 1 && !ds.mul(&ds1).is_zero() {
            return fail(s, "d^2 != 0");
        }
        for alpha in 0..nb {
            let (act_s, act_s1) = (
                left_action(b, alpha, xs[s]),
                left_action(b, alpha, xs[s + 1]),
            );
            if ds1.mul(&act_s1) != act_s.mul(&ds1) {
                return fail(s + 1, "d is not B-linear");
            }
        }
        let cycles = crate::linalg::kernel_basis(&ds);
        let boundaries = crate::linalg::image_basis(&ds1);
        let h = crate::linalg::quotient(&cycles, &boundaries).expect("boundaries are cycles");
        dims.push(h.dim());
        if s == 0 {
            if h.dim() != 1 {
                return fail(0, "H_0 is not one-dimensional");
            }
            let v = &h.representatives()[0];
            for alpha in 0..nb {
                let moved = left_action(b, alpha, xs[0])
                    .mul_vec(v)
                    .sub(&v.scale(&b.eps()[alpha]));
                if !boundaries.contains(&moved) {
                    return fail(0, "B does not act on H_0 through the augmentation");
                }
            }
        } else if h.dim() != 0 {
            return fail(s, "homology does not vanish");
        }
    }
    Ok(ResolutionReport {
        homology_dims: dims,
    })
}

/// The period-one complex `... -> B -x-> B -x-> B` with `len + 1` degrees.
/// It resolves `K` exactly when the kernel and image of `x·` both equal `ker ε`.
pub fn periodic_resolution(b: &AugmentedSubalgebra, x: &SparseVec, len: usize) -> FreeAComplex {
    let d = (0..len)
        .map(|_| AMatrix::from_entries(1, 1, [(0, 0, x.clone())]))
        .collect();
    FreeAComplex::new(b.algebra().clone(), vec![1; len + 1], d, false).expect("period-one shapes")
}

/// `X ⊕ (0 -> A = A -> 0)` with the acyclic summand in degrees `k + 1 -> k`;
/// the new generators are appended last in both degrees.
pub fn pad_with_contractible(x: &FreeAComplex, k: usize) -> Result<FreeAComplex, ResolutionError> {
    if k + 1 > x.top() {
        return Err(ResolutionError::TooShort {
            needed: k + 1,
            available: x.top(),
        });
    }
    let unit = x.algebra().unit();
    let mut fibers = x.fiber_dims().to_vec();
    fibers[k] += 1;
    fibers[k + 1] += 1;
    let d = (1..=x.top())
        .map(|s| {
            let old = x.differential(s);
            let mut entries: Vec<_> = old.entries().map(|(i, j, v)| (i, j, v.clone())).collect();
            if s == k + 1 {
                entries.push((fibers[s] - 1, fibers[s - 1] - 1, unit.clone()));
            }
            AMatrix::from_entries(fibers[s], fibers[s - 1], entries)
        })
        .collect();
    Ok(
        FreeAComplex::new(x.algebra().clone(), fibers, d, x.is_bounded())
            .expect("padding keeps shapes consistent"),
    )
}
