use std::sync::Arc;

use super::{FinAlgebra, ValidationError};
use crate::linalg::{Scalar, SparseVec};

/// A finite-dimensional Lie algebra with `[e_i, e_j] = sum_k f[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    bracket: Vec<SparseVec>,
}

impl LieAlgebra {
    pub fn from_triples(
        dim: usize,
        triples: &[(usize, usize, usize, Scalar)],
    ) -> Result<Self, ValidationError> {
        let mut buckets: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); dim * dim];
        for (i, j, k, c) in triples {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(ValidationError::Shape(format!(
                    "bracket triple ({i},{j},{k}) out of range"
                )));
            }
            buckets[i * dim + j].push((*k, c.clone()));
        }
        let lie = Self {
            dim,
            bracket: buckets.into_iter().map(SparseVec::from_pairs).collect(),
        };
        lie.check_axioms()?;
        Ok(lie)
    }

    pub fn abelian(dim: usize) -> Self {
        Self {
            dim,
            bracket: vec![SparseVec::new(); dim * dim],
        }
    }

    fn check_axioms(&self) -> Result<(), ValidationError> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                let (ij, ji) = (self.basis_bracket(i, j), self.basis_bracket(j, i));
                if let Some(k) = (0..n).find(|&k| ij.get(k) != -ji.get(k)) {
                    return Err(ValidationError::Antisymmetry { i, j, k });
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (ei, ej, ek) = (SparseVec::unit(i), SparseVec::unit(j), SparseVec::unit(k));
                    let s = self
                        .bracket(&ei, &self.bracket(&ej, &ek))
                        .add(&self.bracket(&ej, &self.bracket(&ek, &ei)))
                        .add(&self.bracket(&ek, &self.bracket(&ei, &ej)));
                    if !s.is_zero() {
                        return Err(ValidationError::Jacobi { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> &SparseVec {
        &self.bracket[i * self.dim + j]
    }

    pub fn bracket(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut acc = SparseVec::new();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                acc = acc.add_scaled(self.basis_bracket(i, j), &(a * b));
            }
        }
        acc
    }

    pub fn is_abelian(&self) -> bool {
        self.bracket.iter().all(SparseVec::is_zero)
    }

    pub fn triples(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for (k, c) in self.basis_bracket(i, j).iter() {
                    out.push((i, j, k, c.clone()));
                }
            }
        }
        out
    }
}

/// A Lie algebra homomorphism `ρ: g -> A` (into the commutator Lie algebra of `A`).
#[derive(Clone, Debug)]
pub struct LieAction {
    lie: Arc<LieAlgebra>,
    target: Arc<FinAlgebra>,
    rho: Vec<SparseVec>,
}

impl LieAction {
    pub fn new(
        lie: Arc<LieAlgebra>,
        target: Arc<FinAlgebra>,
        rho: Vec<SparseVec>,
    ) -> Result<Self, ValidationError> {
        let act = Self::new_unchecked(lie, target, rho)?;
        act.validate()?;
        Ok(act)
    }

    /// Builds the action checking only shapes; [`LieAction::validate`] checks the bracket.
    pub fn new_unchecked(
        lie: Arc<LieAlgebra>,
        target: Arc<FinAlgebra>,
        rho: Vec<SparseVec>,
    ) -> Result<Self, ValidationError> {
        if rho.len() != lie.dim() {
            return Err(ValidationError::Shape(format!(
                "{} images for a {}-dimensional Lie algebra",
                rho.len(),
                lie.dim()
            )));
        }
        if rho
            .iter()
            .any(|v| v.max_index().is_some_and(|m| m >= target.dim()))
        {
            return Err(ValidationError::Shape("action image out of range".into()));
        }
        Ok(Self { lie, target, rho })
    }

    /// `ρ(e_i)ρ(e_j) - ρ(e_j)ρ(e_i) = ρ([e_i, e_j])` for all pairs.
    pub fn validate(&self) -> Result<(), ValidationError> {
        let n = self.lie.dim();
        for i in 0..n {
            for j in 0..n {
                let lhs = self
                    .target
                    .mul(&self.rho[i], &self.rho[j])
                    .sub(&self.target.mul(&self.rho[j], &self.rho[i]));
                if lhs != self.apply(self.lie.basis_bracket(i, j)) {
                    return Err(ValidationError::LieAction { i, j });
                }
            }
        }
        Ok(())
    }

    pub fn lie(&self) -> &Arc<LieAlgebra> {
        &self.lie
    }

    pub fn target(&self) -> &Arc<FinAlgebra> {
        &self.target
    }

    pub fn rho(&self) -> &[SparseVec] {
        &self.rho
    }

    /// `ρ(x)` for `x` in Lie-algebra coordinates.
    pub fn apply(&self, x: &SparseVec) -> SparseVec {
        let mut acc = SparseVec::new();
        for (i, c) in x.iter() {
            acc = acc.add_scaled(&self.rho[i], c);
        }
        acc
    }
}
