use std::sync::Arc;

use super::{AugmentedSubalgebra, FinAlgebra, ValidationError};
use crate::linalg::{Matrix, Scalar, SparseVec};

/// A finite-dimensional left module: one action matrix per algebra basis element.
///
/// Right modules over `A` are represented as left modules over `A.opposite()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftModule {
    algebra: Arc<FinAlgebra>,
    dim: usize,
    action: Vec<Matrix>,
}

impl LeftModule {
    pub fn new(
        algebra: Arc<FinAlgebra>,
        dim: usize,
        action: Vec<Matrix>,
    ) -> Result<Self, ValidationError> {
        let m = Self::new_unchecked(algebra, dim, action)?;
        m.validate()?;
        Ok(m)
    }

    pub fn new_unchecked(
        algebra: Arc<FinAlgebra>,
        dim: usize,
        action: Vec<Matrix>,
    ) -> Result<Self, ValidationError> {
        if action.len() != algebra.dim() {
            return Err(ValidationError::Shape(format!(
                "{} action matrices for a {}-dimensional algebra",
                action.len(),
                algebra.dim()
            )));
        }
        if action.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(ValidationError::Shape(format!(
                "action matrices must be {dim}x{dim}"
            )));
        }
        Ok(Self {
            algebra,
            dim,
            action,
        })
    }

    pub fn validate(&self) -> Result<(), ValidationError> {
        if self.act(self.algebra.unit()) != Matrix::identity(self.dim) {
            return Err(ValidationError::ModuleUnit);
        }
        let n = self.algebra.dim();
        for i in 0..n {
            for j in 0..n {
                let lhs = self.action[i].mul(&self.action[j]);
                if lhs != self.act(self.algebra.basis_product(i, j)) {
                    return Err(ValidationError::ModuleAction { i, j });
                }
            }
        }
        Ok(())
    }

    /// The zero module.
    pub fn zero(algebra: Arc<FinAlgebra>) -> Self {
        let n = algebra.dim();
        Self {
            algebra,
            dim: 0,
            action: vec![Matrix::zero(0, 0); n],
        }
    }

    /// `K` with every basis element acting by the scalar `eps[i]`.
    pub fn trivial(algebra: Arc<FinAlgebra>, eps: &[Scalar]) -> Result<Self, ValidationError> {
        let action = eps
            .iter()
            .map(|e| Matrix::from_rows(1, vec![SparseVec::single(0, e.clone())]))
            .collect();
        Self::new(algebra, 1, action)
    }

    /// `A` acting on itself by left multiplication.
    pub fn regular(algebra: Arc<FinAlgebra>) -> Self {
        let action = (0..algebra.dim())
            .map(|i| algebra.left_mult(&SparseVec::unit(i)))
            .collect();
        Self {
            dim: algebra.dim(),
            algebra,
            action,
        }
    }

    /// `A` as a right module over itself, i.e. a left module over `A^opp`.
    pub fn right_regular(algebra: &FinAlgebra) -> Self {
        let action = (0..algebra.dim())
            .map(|i| algebra.right_mult(&SparseVec::unit(i)))
            .collect();
        Self {
            dim: algebra.dim(),
            algebra: Arc::new(algebra.opposite()),
            action,
        }
    }

    pub fn algebra(&self) -> &Arc<FinAlgebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    /// The operator of an algebra element.
    pub fn act(&self, a: &SparseVec) -> Matrix {
        let mut acc = Matrix::zero(self.dim, self.dim);
        for (i, c) in a.iter() {
            acc = acc.add(&self.action[i].scale(c));
        }
        acc
    }

    pub fn act_vec(&self, a: &SparseVec, v: &SparseVec) -> SparseVec {
        let mut acc = SparseVec::new();
        for (i, c) in a.iter() {
            acc = acc.add_scaled(&self.action[i].mul_vec(v), c);
        }
        acc
    }

    /// Restriction along `B -> A`, as a module over `b.algebra()`.
    pub fn restrict(&self, b: &AugmentedSubalgebra) -> LeftModule {
        assert_eq!(
            self.algebra.as_ref(),
            b.parent().as_ref(),
            "module is not over the parent algebra"
        );
        let action = b.inclusion().iter().map(|x| self.act(x)).collect();
        LeftModule {
            algebra: b.algebra().clone(),
            dim: self.dim,
            action,
        }
    }
}
