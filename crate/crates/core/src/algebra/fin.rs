use std::collections::HashMap;

use num::Zero;

use super::ValidationError;
use crate::linalg::{Matrix, Scalar, SparseVec};

/// A finite-dimensional unital associative algebra given by structure constants
/// `e_i e_j = sum_k c[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinAlgebra {
    dim: usize,
    labels: Vec<String>,
    unit: SparseVec,
    table: Vec<SparseVec>,
}

impl FinAlgebra {
    /// `products[i * dim + j]` is the product `e_i e_j`. Checks associativity and the unit.
    pub fn new(
        labels: Vec<String>,
        unit: SparseVec,
        products: Vec<SparseVec>,
    ) -> Result<Self, ValidationError> {
        let dim = labels.len();
        if products.len() != dim * dim {
            return Err(ValidationError::Shape(format!(
                "expected {} products, got {}",
                dim * dim,
                products.len()
            )));
        }
        if products
            .iter()
            .chain(std::iter::once(&unit))
            .any(|p| p.max_index().is_some_and(|m| m >= dim))
        {
            return Err(ValidationError::Shape(
                "structure index out of range".into(),
            ));
        }
        let a = Self {
            dim,
            labels,
            unit,
            table: products,
        };
        a.check_axioms()?;
        Ok(a)
    }

    pub fn from_triples(
        labels: Vec<String>,
        unit: SparseVec,
        triples: &[(usize, usize, usize, Scalar)],
    ) -> Result<Self, ValidationError> {
        let dim = labels.len();
        let mut buckets: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); dim * dim];
        for (i, j, k, c) in triples {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(ValidationError::Shape(format!(
                    "structure triple ({i},{j},{k}) out of range"
                )));
            }
            buckets[i * dim + j].push((*k, c.clone()));
        }
        Self::new(
            labels,
            unit,
            buckets.into_iter().map(SparseVec::from_pairs).collect(),
        )
    }

    fn check_axioms(&self) -> Result<(), ValidationError> {
        let n = self.dim;
        for i in 0..n {
            let e = SparseVec::unit(i);
            if self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e {
                return Err(ValidationError::Unit { i });
            }
        }
        for i in 0..n {
            for j in 0..n {
                let ij = &self.table[i * n + j];
                for k in 0..n {
                    let lhs = self.mul(ij, &SparseVec::unit(k));
                    let rhs = self.mul_basis_left(i, &self.table[j * n + k]);
                    if lhs != rhs {
                        return Err(ValidationError::Associativity { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn unit(&self) -> &SparseVec {
        &self.unit
    }

    /// `e_i e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i * self.dim + j]
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.basis_product(i, j).get(k)
    }

    /// Nonzero structure constants as `(i, j, k, c)`.
    pub fn triples(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for (k, c) in self.basis_product(i, j).iter() {
                    out.push((i, j, k, c.clone()));
                }
            }
        }
        out
    }

    pub fn mul(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut acc: HashMap<usize, Scalar> = HashMap::new();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                let ab = a * b;
                for (k, c) in self.basis_product(i, j).iter() {
                    *acc.entry(k).or_insert_with(Scalar::zero) += &ab * c;
                }
            }
        }
        SparseVec::from_pairs(acc)
    }

    /// `e_i y`.
    pub fn mul_basis_left(&self, i: usize, y: &SparseVec) -> SparseVec {
        let mut acc: HashMap<usize, Scalar> = HashMap::new();
        for (j, b) in y.iter() {
            for (k, c) in self.basis_product(i, j).iter() {
                *acc.entry(k).or_insert_with(Scalar::zero) += b * c;
            }
        }
        SparseVec::from_pairs(acc)
    }

    /// `x e_j`.
    pub fn mul_basis_right(&self, x: &SparseVec, j: usize) -> SparseVec {
        let mut acc: HashMap<usize, Scalar> = HashMap::new();
        for (i, a) in x.iter() {
            for (k, c) in self.basis_product(i, j).iter() {
                *acc.entry(k).or_insert_with(Scalar::zero) += a * c;
            }
        }
        SparseVec::from_pairs(acc)
    }

    /// Matrix of `x -> a x`.
    pub fn left_mult(&self, a: &SparseVec) -> Matrix {
        let cols: Vec<SparseVec> = (0..self.dim).map(|j| self.mul_basis_right(a, j)).collect();
        Matrix::from_columns(self.dim, &cols)
    }

    /// Matrix of `x -> x a`.
    pub fn right_mult(&self, a: &SparseVec) -> Matrix {
        let cols: Vec<SparseVec> = (0..self.dim).map(|i| self.mul_basis_left(i, a)).collect();
        Matrix::from_columns(self.dim, &cols)
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim)
            .all(|i| (0..self.dim).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// The opposite algebra: `c'[i][j][k] = c[j][i][k]`, same basis and unit.
    pub fn opposite(&self) -> FinAlgebra {
        let n = self.dim;
        let table = (0..n * n)
            .map(|ij| self.table[(ij % n) * n + ij / n].clone())
            .collect();
        FinAlgebra {
            dim: n,
            labels: self.labels.clone(),
            unit: self.unit.clone(),
            table,
        }
    }

    /// Coordinates of `x` rendered with basis labels, e.g. `E11 - 1/2*E22`.
    pub fn format_element(&self, x: &SparseVec) -> String {
        if x.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (i, c)) in x.iter().enumerate() {
            let neg = c < &Scalar::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if k > 0 {
                s.push_str(if neg { " - " } else { " + " });
            } else if neg {
                s.push('-');
            }
            if abs != Scalar::from_integer(1.into()) {
                s.push_str(&format!("{abs}*"));
            }
            s.push_str(&self.labels[i]);
        }
        s
    }
}
