use crate::algebra::FinAlgebra;
use crate::linalg::{Matrix, Scalar, SparseVec};

/// Matrix with entries in an algebra `A`, describing an `A`-linear map of free
/// left modules `A ⊗ F -> A ⊗ G`.
///
/// Row convention: row `i` is the image of the generator `1 ⊗ f_i`, that is
/// `1 ⊗ f_i -> sum_j M[i][j] ⊗ g_j`, and `a ⊗ f_i -> sum_j a M[i][j] ⊗ g_j`.
/// Composition "first `M`, then `N`" is the product `M·N` with entries
/// multiplied in `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, SparseVec)>>,
}

impl AMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(n: usize, unit: &SparseVec) -> Self {
        Self {
            rows: n,
            cols: n,
            data: (0..n).map(|i| vec![(i, unit.clone())]).collect(),
        }
    }

    /// Sums duplicate entries and drops zeros.
    pub fn from_entries(
        rows: usize,
        cols: usize,
        entries: impl IntoIterator<Item = (usize, usize, SparseVec)>,
    ) -> Self {
        let mut buckets: Vec<Vec<(usize, SparseVec)>> = vec![Vec::new(); rows];
        for (i, j, x) in entries {
            assert!(
                i < rows && j < cols,
                "entry ({i},{j}) outside {rows}x{cols}"
            );
            buckets[i].push((j, x));
        }
        let data = buckets
            .into_iter()
            .map(|mut row| {
                row.sort_by_key(|e| e.0);
                let mut out: Vec<(usize, SparseVec)> = Vec::with_capacity(row.len());
                for (j, x) in row {
                    match out.last_mut() {
                        Some((k, y)) if *k == j => *y = y.add(&x),
                        _ => out.push((j, x)),
                    }
                }
                out.retain(|(_, x)| !x.is_zero());
                out
            })
            .collect();
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[(usize, SparseVec)] {
        &self.data[i]
    }

    pub fn get(&self, i: usize, j: usize) -> SparseVec {
        match self.data[i].binary_search_by_key(&j, |e| e.0) {
            Ok(k) => self.data[i][k].1.clone(),
            Err(_) => SparseVec::new(),
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &SparseVec)> + '_ {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(j, x)| (i, *j, x)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    /// Columns as lists of `(row, entry)`.
    pub fn column_lists(&self) -> Vec<Vec<(usize, &SparseVec)>> {
        let mut cols = vec![Vec::new(); self.cols];
        for (i, j, x) in self.entries() {
            cols[j].push((i, x));
        }
        cols
    }

    /// The composite "first `self`, then `other`".
    pub fn then(&self, other: &AMatrix, alg: &FinAlgebra) -> AMatrix {
        assert_eq!(self.cols, other.rows, "incompatible A-matrices");
        let mut entries = Vec::new();
        for (i, row) in self.data.iter().enumerate() {
            for (j, x) in row {
                for (k, y) in &other.data[*j] {
                    entries.push((i, *k, alg.mul(x, y)));
                }
            }
        }
        AMatrix::from_entries(self.rows, other.cols, entries)
    }

    pub fn add(&self, other: &AMatrix) -> AMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        AMatrix::from_entries(
            self.rows,
            self.cols,
            self.entries()
                .chain(other.entries())
                .map(|(i, j, x)| (i, j, x.clone())),
        )
    }

    pub fn scale(&self, c: &Scalar) -> AMatrix {
        AMatrix::from_entries(
            self.rows,
            self.cols,
            self.entries().map(|(i, j, x)| (i, j, x.scale(c))),
        )
    }

    pub fn sub(&self, other: &AMatrix) -> AMatrix {
        self.add(&other.scale(&-Scalar::from_integer(1.into())))
    }

    pub fn map_entries(&self, f: impl Fn(&SparseVec) -> SparseVec) -> AMatrix {
        AMatrix::from_entries(
            self.rows,
            self.cols,
            self.entries().map(|(i, j, x)| (i, j, f(x))),
        )
    }

    /// Image of `1 ⊗ f_i` as a coordinate vector of `A ⊗ G` (index `j * dim A + α`).
    pub fn row_vector(&self, i: usize, dim_a: usize) -> SparseVec {
        SparseVec::from_pairs(
            self.data[i]
                .iter()
                .flat_map(|(j, x)| x.iter().map(move |(a, c)| (j * dim_a + a, c.clone()))),
        )
    }

    pub fn from_row_vectors(cols: usize, dim_a: usize, rows: &[SparseVec]) -> AMatrix {
        let entries = rows.iter().enumerate().flat_map(|(i, v)| {
            v.iter()
                .map(move |(k, c)| (i, k / dim_a, SparseVec::single(k % dim_a, c.clone())))
        });
        AMatrix::from_entries(rows.len(), cols, entries)
    }

    /// The underlying `K`-linear map as a `(cols·dim A) x (rows·dim A)` matrix.
    pub fn to_scalar_matrix(&self, alg: &FinAlgebra) -> Matrix {
        let n = alg.dim();
        let mut columns = Vec::with_capacity(self.rows * n);
        for row in &self.data {
            for a in 0..n {
                let pairs = row.iter().flat_map(|(j, x)| {
                    alg.mul_basis_left(a, x)
                        .iter()
                        .map(|(b, c)| (j * n + b, c.clone()))
                        .collect::<Vec<_>>()
                });
                columns.push(SparseVec::from_pairs(pairs));
            }
        }
        Matrix::from_columns(self.cols * n, &columns)
    }

    /// Flattened coordinates, index `(i * cols + j) * dim A + α`.
    pub fn coords(&self, dim_a: usize) -> SparseVec {
        SparseVec::from_pairs(self.entries().flat_map(|(i, j, x)| {
            let base = (i * self.cols + j) * dim_a;
            x.iter()
                .map(move |(a, c)| (base + a, c.clone()))
                .collect::<Vec<_>>()
        }))
    }

    pub fn from_coords(rows: usize, cols: usize, dim_a: usize, v: &SparseVec) -> AMatrix {
        let entries = v.iter().map(|(k, c)| {
            let (ij, a) = (k / dim_a, k % dim_a);
            (ij / cols, ij % cols, SparseVec::single(a, c.clone()))
        });
        AMatrix::from_entries(rows, cols, entries)
    }
}
