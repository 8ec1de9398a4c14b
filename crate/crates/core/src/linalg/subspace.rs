//! Subspaces in canonical form, kernels, images, quotients and linear solves.

use num::Zero;

use super::echelon::{rref, rref_rightmost, Echelon};
use super::scalar::Scalar;
use super::sparse::{Matrix, SparseVec};
use super::LinalgError;

/// A subspace of `K^n` stored by its reduced row echelon basis.
///
/// Two subspaces are equal exactly when their data are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<SparseVec>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: (0..ambient_dim).map(SparseVec::unit).collect(),
            pivots: (0..ambient_dim).collect(),
        }
    }

    pub fn span(ambient_dim: usize, vectors: &[SparseVec]) -> Self {
        let r = rref(vectors, ambient_dim);
        Self {
            ambient_dim,
            basis: r.rows,
            pivots: r.pivots,
        }
    }

    pub(crate) fn from_rref_unchecked(ambient_dim: usize, basis: Vec<SparseVec>) -> Self {
        let pivots = basis.iter().map(|b| b.leading().unwrap().0).collect();
        Self {
            ambient_dim,
            basis,
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the basis; the result vanishes on every pivot column.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut r = v.clone();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            let c = r.get(p);
            if !c.is_zero() {
                r = r.add_scaled(b, &-c);
            }
        }
        r
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is not in the span.
    pub fn coordinates(&self, v: &SparseVec) -> Option<Vec<Scalar>> {
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v.get(p)).collect();
        let mut r = v.clone();
        for (b, c) in self.basis.iter().zip(&coords) {
            if !c.is_zero() {
                r = r.add_scaled(b, &-c.clone());
            }
        }
        r.is_zero().then_some(coords)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim && self.basis.iter().all(|b| other.contains(b))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient_dim, &all)
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        // x = sum a_i u_i = sum b_j w_j  <=>  (a, -b) in ker [U | W]
        let n = self.dim();
        let mut cols = self.basis.clone();
        cols.extend(other.basis.iter().map(SparseVec::neg));
        let m = Matrix::from_columns(self.ambient_dim, &cols);
        let ker = kernel_basis(&m);
        let vecs: Vec<SparseVec> = ker
            .basis()
            .iter()
            .map(|k| {
                let mut acc = SparseVec::new();
                for (i, c) in k.iter().filter(|(i, _)| *i < n) {
                    acc = acc.add_scaled(&self.basis[i], c);
                }
                acc
            })
            .collect();
        Subspace::span(self.ambient_dim, &vecs)
    }

    /// Image of the subspace under `m` (which must have `ambient_dim` columns).
    pub fn image_under(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient_dim);
        let vecs: Vec<SparseVec> = self.basis.iter().map(|b| m.mul_vec(b)).collect();
        Subspace::span(m.rows(), &vecs)
    }
}

/// Null space of `m`, in canonical echelon form.
///
/// Uses the rightmost-pivot reduced form of `m`: each free column then yields
/// a kernel vector whose leading entry is that free column, so the natural
/// kernel basis is already reduced.
pub fn kernel_basis(m: &Matrix) -> Subspace {
    let n = m.cols();
    let r = rref_rightmost(m.row_vectors(), n);
    let mut is_pivot = vec![false; n];
    for &p in &r.pivots {
        is_pivot[p] = true;
    }
    let mut kernel: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); n];
    for (row, &p) in r.rows.iter().zip(&r.pivots) {
        for (f, c) in row.iter() {
            if f != p {
                kernel[f].push((p, -c.clone()));
            }
        }
    }
    let basis: Vec<SparseVec> = (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut entries = std::mem::take(&mut kernel[f]);
            entries.push((f, Scalar::from_integer(1.into())));
            SparseVec::from_pairs(entries)
        })
        .collect();
    Subspace::from_rref_unchecked(n, basis)
}

/// Column space of `m`, in canonical echelon form.
pub fn image_basis(m: &Matrix) -> Subspace {
    Subspace::span(m.rows(), &m.columns())
}

pub fn rank(m: &Matrix) -> usize {
    let mut rows: Vec<&SparseVec> = m.row_vectors().iter().filter(|r| !r.is_zero()).collect();
    rows.sort_by_key(|r| r.nnz());
    let mut ech = Echelon::new(m.cols());
    for r in rows {
        ech.insert(r);
    }
    ech.rank()
}

/// `ambient / sub` with a canonical set of coset representatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    sub: Subspace,
    reps: Subspace,
}

impl Quotient {
    pub fn dim(&self) -> usize {
        self.reps.dim()
    }

    pub fn sub(&self) -> &Subspace {
        &self.sub
    }

    /// Representatives, reduced against `sub` and in echelon form among themselves.
    pub fn representatives(&self) -> &[SparseVec] {
        self.reps.basis()
    }

    /// Coordinates of the class of `v`, or `None` if `v` is not in the ambient space.
    pub fn class_of(&self, v: &SparseVec) -> Option<Vec<Scalar>> {
        self.reps.coordinates(&self.sub.reduce(v))
    }

    /// Lifts class coordinates back to a representative vector.
    pub fn lift(&self, coords: &[Scalar]) -> SparseVec {
        assert_eq!(coords.len(), self.dim());
        let mut acc = SparseVec::new();
        for (r, c) in self.reps.basis().iter().zip(coords) {
            acc = acc.add_scaled(r, c);
        }
        acc
    }
}

/// Quotient of `ambient` by `sub`; fails with `NotASubspace` if `sub` is not contained in `ambient`.
pub fn quotient(ambient: &Subspace, sub: &Subspace) -> Result<Quotient, LinalgError> {
    if ambient.ambient_dim() != sub.ambient_dim() {
        return Err(LinalgError::DimensionMismatch {
            expected: ambient.ambient_dim(),
            found: sub.ambient_dim(),
        });
    }
    if let Some(k) = sub.basis().iter().position(|b| !ambient.contains(b)) {
        return Err(LinalgError::NotASubspace { index: k });
    }
    let residues: Vec<SparseVec> = ambient.basis().iter().map(|b| sub.reduce(b)).collect();
    let reps = Subspace::span(ambient.ambient_dim(), &residues);
    debug_assert_eq!(reps.dim() + sub.dim(), ambient.dim());
    Ok(Quotient {
        sub: sub.clone(),
        reps,
    })
}

/// Solves `m x = rhs` exactly. `Ok(None)` means the system is inconsistent.
pub fn solve(m: &Matrix, rhs: &SparseVec) -> Result<Option<SparseVec>, LinalgError> {
    if rhs.max_index().is_some_and(|i| i >= m.rows()) {
        return Err(LinalgError::DimensionMismatch {
            expected: m.rows(),
            found: rhs.max_index().unwrap() + 1,
        });
    }
    let n = m.cols();
    // Augmented rows [m_i | rhs_i]; the rhs column is last so it never pivots
    // unless the system is inconsistent.
    let rows: Vec<SparseVec> = m
        .row_vectors()
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let b = rhs.get(i);
            if b.is_zero() {
                r.clone()
            } else {
                let mut e = r.entries().to_vec();
                e.push((n, b));
                SparseVec::from_pairs(e)
            }
        })
        .collect();
    let r = rref(&rows, n + 1);
    if r.pivots.last() == Some(&n) {
        return Ok(None);
    }
    let x = SparseVec::from_pairs(
        r.rows
            .iter()
            .zip(&r.pivots)
            .map(|(row, &p)| (p, row.get(n))),
    );
    debug_assert_eq!(&m.mul_vec(&x), rhs);
    Ok(Some(x))
}
