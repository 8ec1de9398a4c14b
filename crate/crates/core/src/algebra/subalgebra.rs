use std::sync::Arc;

use num::{One, Zero};

use super::{FinAlgebra, ValidationError};
use crate::linalg::{kernel_basis, rank, solve, Matrix, Scalar, SparseVec, Subspace};

/// A subalgebra `B ⊆ A` with an augmentation `ε: B -> K`.
///
/// Besides the input data this caches `B` as an algebra in its own basis and
/// the canonical basis `u_1..u_m` of `ker ε`, which models `I(B) = B/K`.
#[derive(Clone, Debug)]
pub struct AugmentedSubalgebra {
    parent: Arc<FinAlgebra>,
    inclusion: Vec<SparseVec>,
    inclusion_matrix: Matrix,
    eps: Vec<Scalar>,
    algebra: Arc<FinAlgebra>,
    kernel: Subspace,
    kernel_in_parent: Vec<SparseVec>,
    kernel_products: Vec<SparseVec>,
}

impl AugmentedSubalgebra {
    /// `inclusion[j]` is the image of the `j`-th basis vector of `B` in `A`; `eps[j]` its augmentation.
    pub fn new(
        parent: Arc<FinAlgebra>,
        inclusion: Vec<SparseVec>,
        eps: Vec<Scalar>,
    ) -> Result<Self, ValidationError> {
        let n = inclusion.len();
        if n == 0 {
            return Err(ValidationError::SubalgebraEmpty);
        }
        if eps.len() != n {
            return Err(ValidationError::Shape(format!(
                "{} augmentation values for {} basis vectors",
                eps.len(),
                n
            )));
        }
        if inclusion
            .iter()
            .any(|v| v.max_index().is_some_and(|m| m >= parent.dim()))
        {
            return Err(ValidationError::Shape(
                "inclusion column out of range".into(),
            ));
        }
        let inclusion_matrix = Matrix::from_columns(parent.dim(), &inclusion);
        if rank(&inclusion_matrix) != n {
            return Err(ValidationError::SubalgebraIndependence);
        }
        let in_b = |x: &SparseVec| solve(&inclusion_matrix, x).expect("dimensions agree");
        let unit_coords = in_b(parent.unit()).ok_or(ValidationError::SubalgebraUnit)?;
        let mut products = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let p = parent.mul(&inclusion[i], &inclusion[j]);
                products.push(in_b(&p).ok_or(ValidationError::SubalgebraClosure { i, j })?);
            }
        }
        let eval = |x: &SparseVec| {
            x.iter()
                .fold(Scalar::zero(), |acc, (k, c)| acc + c * &eps[k])
        };
        if !eval(&unit_coords).is_one() {
            return Err(ValidationError::AugmentationUnit);
        }
        for i in 0..n {
            for j in 0..n {
                if eval(&products[i * n + j]) != &eps[i] * &eps[j] {
                    return Err(ValidationError::AugmentationMultiplicative { i, j });
                }
            }
        }
        let labels = inclusion
            .iter()
            .enumerate()
            .map(|(j, v)| match v.entries() {
                [(k, c)] if c.is_one() => parent.labels()[*k].clone(),
                _ => format!("b{j}"),
            })
            .collect();
        let algebra = Arc::new(FinAlgebra::new(labels, unit_coords, products)?);

        let eps_row = Matrix::from_rows(n, vec![SparseVec::from_dense(&eps)]);
        let kernel = kernel_basis(&eps_row);
        let kernel_in_parent = kernel
            .basis()
            .iter()
            .map(|u| inclusion_matrix.mul_vec(u))
            .collect();
        let m = kernel.dim();
        let mut kernel_products = Vec::with_capacity(m * m);
        for a in kernel.basis() {
            for b in kernel.basis() {
                let ab = algebra.mul(a, b);
                let coords = kernel.coordinates(&ab).expect("ker ε is an ideal of B");
                kernel_products.push(SparseVec::from_dense(&coords));
            }
        }
        Ok(Self {
            parent,
            inclusion,
            inclusion_matrix,
            eps,
            algebra,
            kernel,
            kernel_in_parent,
            kernel_products,
        })
    }

    /// `B = K·1` with `ε(1) = 1`.
    pub fn trivial(parent: Arc<FinAlgebra>) -> Self {
        let unit = parent.unit().clone();
        Self::new(parent, vec![unit], vec![Scalar::one()])
            .expect("K·1 is always an augmented subalgebra")
    }

    /// `B = A` with the given augmentation.
    pub fn whole(parent: Arc<FinAlgebra>, eps: Vec<Scalar>) -> Result<Self, ValidationError> {
        let inclusion = (0..parent.dim()).map(SparseVec::unit).collect();
        Self::new(parent, inclusion, eps)
    }

    pub fn parent(&self) -> &Arc<FinAlgebra> {
        &self.parent
    }

    /// `B` as an algebra in its own basis.
    pub fn algebra(&self) -> &Arc<FinAlgebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.inclusion.len()
    }

    pub fn inclusion(&self) -> &[SparseVec] {
        &self.inclusion
    }

    pub fn inclusion_matrix(&self) -> &Matrix {
        &self.inclusion_matrix
    }

    pub fn eps(&self) -> &[Scalar] {
        &self.eps
    }

    /// `ε` of an element given in `B`-coordinates.
    pub fn augment(&self, x: &SparseVec) -> Scalar {
        x.iter()
            .fold(Scalar::zero(), |acc, (k, c)| acc + c * &self.eps[k])
    }

    /// Image in `A` of an element given in `B`-coordinates.
    pub fn include(&self, x: &SparseVec) -> SparseVec {
        self.inclusion_matrix.mul_vec(x)
    }

    /// `B`-coordinates of an element of `A`, if it lies in `B`.
    pub fn restrict(&self, a: &SparseVec) -> Option<SparseVec> {
        solve(&self.inclusion_matrix, a).expect("dimensions agree")
    }

    /// `ker ε` as a subspace of `B` (canonical echelon basis).
    pub fn kernel(&self) -> &Subspace {
        &self.kernel
    }

    pub fn kernel_dim(&self) -> usize {
        self.kernel.dim()
    }

    /// Basis of `ker ε` in `B`-coordinates.
    pub fn kernel_basis(&self) -> &[SparseVec] {
        self.kernel.basis()
    }

    /// Basis of `ker ε` as elements of `A`.
    pub fn kernel_in_parent(&self) -> &[SparseVec] {
        &self.kernel_in_parent
    }

    /// `u_i u_j` in the `ker ε` basis.
    pub fn kernel_product(&self, i: usize, j: usize) -> &SparseVec {
        &self.kernel_products[i * self.kernel.dim() + j]
    }

    /// `ker ε ⊆ A` as a subspace.
    pub fn kernel_subspace_of_parent(&self) -> Subspace {
        Subspace::span(self.parent.dim(), &self.kernel_in_parent)
    }
}
