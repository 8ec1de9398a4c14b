use super::ResolutionError;
use crate::complexes::{AMatrix, FreeAComplex, GradedMap};
use crate::linalg::{solve, Matrix};

/// Solve `d z = target` for each row of `targets`, returning the solutions as an A-matrix.
fn solve_rows(
    d: &Matrix,
    targets: &AMatrix,
    out_cols: usize,
    dim_a: usize,
    degree: usize,
) -> Result<AMatrix, ResolutionError> {
    let mut rows = Vec::with_capacity(targets.rows());
    for i in 0..targets.rows() {
        let rhs = targets.row_vector(i, dim_a);
        let z = solve(d, &rhs)
            .expect("dimensions agree")
            .ok_or(ResolutionError::NoLift { degree })?;
        rows.push(z);
    }
    Ok(AMatrix::from_row_vectors(out_cols, dim_a, &rows))
}

/// Extend `f0: X_0 -> X'_0` to a chain map `F: X -> X'` in degrees `0..=upto`,
/// solving `d' F_s(g) = F_{s-1}(d g)` generator by generator. Needs `X'`
/// exact where the lift is formed.
pub fn lift_chain_map(
    from: &FreeAComplex,
    to: &FreeAComplex,
    f0: AMatrix,
    upto: usize,
) -> Result<GradedMap, ResolutionError> {
    let alg = from.algebra();
    assert_eq!(
        alg.as_ref(),
        to.algebra().as_ref(),
        "complexes over different algebras"
    );
    assert_eq!((f0.rows(), f0.cols()), (from.fiber_dim(0), to.fiber_dim(0)));
    let mut comps = vec![f0];
    for s in 1..=upto {
        if !from.has_degree(s) || !to.has_degree(s) {
            return Err(ResolutionError::TooShort {
                needed: s,
                available: from.top().min(to.top()),
            });
        }
        let (rows, cols) = (from.fiber_dim(s), to.fiber_dim(s));
        let target = if s <= from.top() {
            from.differential(s).then(&comps[s - 1], alg)
        } else {
            AMatrix::zero(rows, to.fiber_dim(s - 1))
        };
        let next = if s <= to.top() {
            solve_rows(
                &to.differential(s).to_scalar_matrix(alg),
                &target,
                cols,
                alg.dim(),
                s,
            )?
        } else if target.is_zero() {
            AMatrix::zero(rows, cols)
        } else {
            return Err(ResolutionError::NoLift { degree: s });
        };
        comps.push(next);
    }
    Ok(GradedMap {
        shift: 0,
        components: comps,
    })
}

/// A homotopy `h` with `r = d h + h d` on `X` in degrees `0..=upto`, for a chain
/// map `r: X -> X` inducing zero on `H_0` (for instance `F' F - id`).
pub fn lift_homotopy(
    x: &FreeAComplex,
    r: &GradedMap,
    upto: usize,
) -> Result<GradedMap, ResolutionError> {
    let alg = x.algebra();
    let mut comps: Vec<AMatrix> = Vec::with_capacity(upto + 1);
    for s in 0..=upto {
        if !x.has_degree(s + 1) {
            return Err(ResolutionError::TooShort {
                needed: s + 1,
                available: x.top(),
            });
        }
        let n = x.fiber_dim(s);
        let mut target = r.components[s].clone();
        if s >= 1 {
            target = target.sub(&x.differential(s).then(&comps[s - 1], alg));
        }
        let next = if s < x.top() {
            solve_rows(
                &x.differential(s + 1).to_scalar_matrix(alg),
                &target,
                x.fiber_dim(s + 1),
                alg.dim(),
                s,
            )?
        } else if target.is_zero() {
            AMatrix::zero(n, x.fiber_dim(s + 1))
        } else {
            return Err(ResolutionError::NoLift { degree: s });
        };
        comps.push(next);
    }
    Ok(GradedMap {
        shift: 1,
        components: comps,
    })
}

/// The chain map `F' F - id` on `X`.
pub fn defect(x: &FreeAComplex, f: &GradedMap, fp: &GradedMap) -> GradedMap {
    let alg = x.algebra();
    let components = f
        .components
        .iter()
        .zip(&fp.components)
        .enumerate()
        .map(|(s, (a, b))| {
            a.then(b, alg)
                .sub(&AMatrix::identity(x.fiber_dim(s), alg.unit()))
        })
        .collect();
    GradedMap {
        shift: 0,
        components,
    }
}
