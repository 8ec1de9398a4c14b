use super::{AMatrix, ChainComplex, CochainComplex, FreeAComplex};
use crate::algebra::LeftModule;
use crate::linalg::{sign, Matrix, SparseVec};

/// `Hom_R(X, M)` for a free `R`-complex `X` and a left `R`-module `M`.
///
/// A cochain of degree `s` is `φ: F_s -> M`, stored with coordinate index
/// `i * dim M + k` for the `k`-th coordinate of `φ(g_i)`. The coboundary is
/// `δφ = (-1)^{s+1} φ ∘ d`, the outer differential of the End complex, so
/// `(δφ)(g_i) = (-1)^{s+1} Σ_j D[i][j] · φ(g_j)`.
pub fn hom_complex(x: &FreeAComplex, m: &LeftModule) -> CochainComplex {
    assert_eq!(
        x.algebra().as_ref(),
        m.algebra().as_ref(),
        "module over a different algebra"
    );
    let dm = m.dim();
    let dims: Vec<usize> = x.fiber_dims().iter().map(|f| f * dm).collect();
    let d = (1..x.len())
        .map(|s| coboundary_matrix(x.differential(s), m, &sign(s as i64)))
        .collect();
    CochainComplex::new(dims, d, !x.is_bounded())
}

/// Matrix of `φ -> c · φ ∘ D` from `Hom(F_{s-1}, M)` to `Hom(F_s, M)`.
pub(crate) fn coboundary_matrix(
    dmat: &AMatrix,
    m: &LeftModule,
    c: &crate::linalg::Scalar,
) -> Matrix {
    let dm = m.dim();
    let mut triplets = Vec::new();
    for (i, j, entry) in dmat.entries() {
        let act = m.act(entry);
        for (k_out, row) in act.row_vectors().iter().enumerate() {
            for (k_in, v) in row.iter() {
                triplets.push((i * dm + k_out, j * dm + k_in, v * c));
            }
        }
    }
    Matrix::from_triplets(dmat.rows() * dm, dmat.cols() * dm, triplets)
}

/// `W ⊗_R X` for a right `R`-module `W` (a left module over `R^opp`, whose
/// basis is that of `R`) and a free `R`-complex `X`.
///
/// Coordinates `i * dim W + k` stand for `w_k ⊗ g_i`, and
/// `d(w ⊗ g_i) = Σ_j (w · D[i][j]) ⊗ g_j`.
pub fn tensor_complex(w: &LeftModule, x: &FreeAComplex) -> ChainComplex {
    assert_eq!(
        w.algebra().dim(),
        x.algebra().dim(),
        "module over a different algebra"
    );
    let dw = w.dim();
    let dims: Vec<usize> = x.fiber_dims().iter().map(|f| f * dw).collect();
    let d = (1..x.len())
        .map(|s| tensor_boundary(x.differential(s), w))
        .collect();
    ChainComplex::new(dims, d, !x.is_bounded())
}

pub(crate) fn tensor_boundary(dmat: &AMatrix, w: &LeftModule) -> Matrix {
    let dw = w.dim();
    let mut triplets = Vec::new();
    for (i, j, entry) in dmat.entries() {
        let act = w.act(entry);
        for (k_out, row) in act.row_vectors().iter().enumerate() {
            for (k_in, v) in row.iter() {
                triplets.push((j * dw + k_out, i * dw + k_in, v.clone()));
            }
        }
    }
    Matrix::from_triplets(dmat.cols() * dw, dmat.rows() * dw, triplets)
}

/// Coordinates of `φ: F -> M` given the images of the generators.
pub fn hom_cochain(images: &[SparseVec], module_dim: usize) -> SparseVec {
    SparseVec::from_pairs(images.iter().enumerate().flat_map(|(i, v)| {
        v.iter()
            .map(move |(k, c)| (i * module_dim + k, c.clone()))
            .collect::<Vec<_>>()
    }))
}
