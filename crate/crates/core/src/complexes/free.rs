use std::sync::Arc;

use super::{AMatrix, ChainComplex, ComplexError};
use crate::algebra::FinAlgebra;
use crate::linalg::SparseVec;

/// A complex of free left modules `X_s = A ⊗ F_s` with `A`-linear differentials.
///
/// Degrees `0..len` are stored. A `bounded` complex is zero above its top
/// degree; otherwise it is a truncation of an infinite complex and the top
/// degree has no known outgoing boundaries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeAComplex {
    algebra: Arc<FinAlgebra>,
    fiber_dims: Vec<usize>,
    d: Vec<AMatrix>,
    bounded: bool,
}

impl FreeAComplex {
    /// `d[s - 1]` is `d_s: X_s -> X_{s-1}`, a `fiber_dims[s] x fiber_dims[s-1]` A-matrix.
    pub fn new(
        algebra: Arc<FinAlgebra>,
        fiber_dims: Vec<usize>,
        d: Vec<AMatrix>,
        bounded: bool,
    ) -> Result<Self, ComplexError> {
        if fiber_dims.is_empty() || d.len() + 1 != fiber_dims.len() {
            return Err(ComplexError::Shape(format!(
                "{} fibers need {} differentials, got {}",
                fiber_dims.len(),
                fiber_dims.len().saturating_sub(1),
                d.len()
            )));
        }
        for (k, m) in d.iter().enumerate() {
            if (m.rows(), m.cols()) != (fiber_dims[k + 1], fiber_dims[k]) {
                return Err(ComplexError::Shape(format!(
                    "d_{} is {}x{}, expected {}x{}",
                    k + 1,
                    m.rows(),
                    m.cols(),
                    fiber_dims[k + 1],
                    fiber_dims[k]
                )));
            }
            if let Some((_, _, x)) = m
                .entries()
                .find(|(_, _, x)| x.max_index().is_some_and(|i| i >= algebra.dim()))
            {
                return Err(ComplexError::Shape(format!(
                    "d_{} has an entry {x} outside A",
                    k + 1
                )));
            }
        }
        Ok(Self {
            algebra,
            fiber_dims,
            d,
            bounded,
        })
    }

    pub fn algebra(&self) -> &Arc<FinAlgebra> {
        &self.algebra
    }

    /// Number of stored degrees.
    pub fn len(&self) -> usize {
        self.fiber_dims.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn top(&self) -> usize {
        self.fiber_dims.len() - 1
    }

    pub fn is_bounded(&self) -> bool {
        self.bounded
    }

    pub fn fiber_dims(&self) -> &[usize] {
        &self.fiber_dims
    }

    /// Rank of `X_s`; zero above the top of a bounded complex.
    pub fn fiber_dim(&self, s: usize) -> usize {
        match self.fiber_dims.get(s) {
            Some(&n) => n,
            None if self.bounded => 0,
            None => panic!("degree {s} is beyond the truncation"),
        }
    }

    /// Whether `X_s` is known (stored or zero above a bounded top).
    pub fn has_degree(&self, s: usize) -> bool {
        s < self.fiber_dims.len() || self.bounded
    }

    /// `d_s: X_s -> X_{s-1}` for `1 <= s <= top`.
    pub fn differential(&self, s: usize) -> &AMatrix {
        &self.d[s - 1]
    }

    pub fn differentials(&self) -> &[AMatrix] {
        &self.d
    }

    /// First `s` with `d_{s-1} d_s != 0`, checked on A-matrices.
    pub fn find_d_squared_failure(&self) -> Option<usize> {
        (2..self.len()).find(|&s| !self.d[s - 1].then(&self.d[s - 2], &self.algebra).is_zero())
    }

    /// The underlying complex of vector spaces, `dim X_s = dim A · fiber_s`.
    pub fn scalar_complex(&self) -> ChainComplex {
        let n = self.algebra.dim();
        let dims = self.fiber_dims.iter().map(|f| f * n).collect();
        let d = self
            .d
            .iter()
            .map(|m| m.to_scalar_matrix(&self.algebra))
            .collect();
        ChainComplex::new(dims, d, !self.bounded)
    }

    /// The first `len` degrees, as a truncated complex.
    pub fn truncate(&self, len: usize) -> FreeAComplex {
        if len >= self.len() {
            return self.clone();
        }
        Self {
            algebra: self.algebra.clone(),
            fiber_dims: self.fiber_dims[..len].to_vec(),
            d: self.d[..len - 1].to_vec(),
            bounded: false,
        }
    }

    /// Apply an algebra map to every entry (for instance the inclusion `B -> A`).
    pub fn map_entries(
        &self,
        target: Arc<FinAlgebra>,
        f: impl Fn(&SparseVec) -> SparseVec,
    ) -> FreeAComplex {
        Self {
            algebra: target,
            fiber_dims: self.fiber_dims.clone(),
            d: self.d.iter().map(|m| m.map_entries(&f)).collect(),
            bounded: self.bounded,
        }
    }
}
