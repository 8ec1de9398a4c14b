use super::ComplexError;
use crate::linalg::{image_basis, kernel_basis, quotient, Matrix, Quotient, Subspace};

/// A chain complex of finite-dimensional spaces in degrees `0..len` with
/// differentials `d_n: C_n -> C_{n-1}`.
///
/// A `truncated` complex continues above its last degree; homology is then
/// not available at the top degree.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    dims: Vec<usize>,
    d: Vec<Matrix>,
    truncated: bool,
}

/// A homology or cohomology group with canonical representatives.
#[derive(Clone, Debug)]
pub struct Homology {
    pub cycles: Subspace,
    pub quotient: Quotient,
}

impl Homology {
    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub(crate) fn new(cycles: Subspace, boundaries: &Subspace) -> Self {
        let quotient = quotient(&cycles, boundaries).expect("boundaries are cycles");
        Self { cycles, quotient }
    }
}

impl ChainComplex {
    /// `d[n - 1]` is the differential `C_n -> C_{n-1}` for `n = 1..dims.len()`.
    pub fn new(dims: Vec<usize>, d: Vec<Matrix>, truncated: bool) -> Self {
        assert_eq!(
            d.len() + 1,
            dims.len().max(1),
            "one differential per positive degree"
        );
        for (k, m) in d.iter().enumerate() {
            assert_eq!(
                (m.rows(), m.cols()),
                (dims[k], dims[k + 1]),
                "d_{} has the wrong shape",
                k + 1
            );
        }
        Self { dims, d, truncated }
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    /// `d_n: C_n -> C_{n-1}`; `d_0` is the zero map to the zero space.
    pub fn differential(&self, n: usize) -> Matrix {
        if n == 0 {
            Matrix::zero(0, self.dims[0])
        } else {
            self.d[n - 1].clone()
        }
    }

    /// First `n` with `d_n d_{n+1} != 0`, if any.
    pub fn find_d_squared_failure(&self) -> Option<usize> {
        (1..self.d.len()).find(|&k| !self.d[k - 1].mul(&self.d[k]).is_zero())
    }

    pub fn homology(&self, n: i64) -> Result<Homology, ComplexError> {
        let top = self.dims.len() as i64 - 1;
        if n < 0 || n > top || (self.truncated && n == top) {
            return Err(ComplexError::DegreeOutOfRange { degree: n });
        }
        let n = n as usize;
        let cycles = kernel_basis(&self.differential(n));
        let boundaries = if n < self.d.len() {
            image_basis(&self.d[n])
        } else {
            Subspace::zero(self.dims[n])
        };
        Ok(Homology::new(cycles, &boundaries))
    }

    /// Homology dimensions in every degree where they are defined.
    pub fn homology_dims(&self) -> Vec<usize> {
        let top = if self.truncated {
            self.dims.len().saturating_sub(1)
        } else {
            self.dims.len()
        };
        (0..top)
            .map(|n| self.homology(n as i64).unwrap().dim())
            .collect()
    }
}

/// A cochain complex in degrees `0..len` with `δ^n: C^n -> C^{n+1}`.
#[derive(Clone, Debug)]
pub struct CochainComplex {
    dims: Vec<usize>,
    d: Vec<Matrix>,
    truncated: bool,
}

impl CochainComplex {
    /// `d[n]` maps degree `n` to `n + 1`, for `n = 0..dims.len() - 1`.
    pub fn new(dims: Vec<usize>, d: Vec<Matrix>, truncated: bool) -> Self {
        assert_eq!(d.len() + 1, dims.len().max(1));
        for (k, m) in d.iter().enumerate() {
            assert_eq!(
                (m.rows(), m.cols()),
                (dims[k + 1], dims[k]),
                "δ^{k} has the wrong shape"
            );
        }
        Self { dims, d, truncated }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn differential(&self, n: usize) -> &Matrix {
        &self.d[n]
    }

    pub fn find_d_squared_failure(&self) -> Option<usize> {
        (1..self.d.len()).find(|&k| !self.d[k].mul(&self.d[k - 1]).is_zero())
    }

    pub fn cohomology(&self, n: i64) -> Result<Homology, ComplexError> {
        let top = self.dims.len() as i64 - 1;
        if n < 0 || n > top || (self.truncated && n == top) {
            return Err(ComplexError::DegreeOutOfRange { degree: n });
        }
        let n = n as usize;
        let cocycles = if n < self.d.len() {
            kernel_basis(&self.d[n])
        } else {
            Subspace::full(self.dims[n])
        };
        let coboundaries = if n == 0 {
            Subspace::zero(self.dims[0])
        } else {
            image_basis(&self.d[n - 1])
        };
        Ok(Homology::new(cocycles, &coboundaries))
    }

    pub fn cohomology_dims(&self) -> Vec<usize> {
        let top = if self.truncated {
            self.dims.len().saturating_sub(1)
        } else {
            self.dims.len()
        };
        (0..top)
            .map(|n| self.cohomology(n as i64).unwrap().dim())
            .collect()
    }
}
