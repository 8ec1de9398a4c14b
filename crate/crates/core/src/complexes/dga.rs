use std::collections::BTreeMap;

use super::{ComplexError, Homology};
use crate::algebra::{FinAlgebra, ValidationError};
use crate::linalg::{image_basis, kernel_basis, Matrix, SparseVec};

/// A cochain dg algebra given by coordinates in each degree.
pub trait DgAlgebra {
    fn degree_dim(&self, n: i64) -> Result<usize, ComplexError>;
    /// `δ^n: Y^n -> Y^{n+1}`.
    fn differential(&self, n: i64) -> Result<Matrix, ComplexError>;
    /// Product of `x ∈ Y^n` and `y ∈ Y^m`.
    fn product(
        &self,
        n: i64,
        x: &SparseVec,
        m: i64,
        y: &SparseVec,
    ) -> Result<SparseVec, ComplexError>;
    /// Coordinates of the unit in `Y^0`, when it lies in the computed range.
    fn unit(&self) -> Option<SparseVec>;
}

/// A basis class `h^n_i` as `(n, i)`.
pub type ClassIndex = (i64, usize);

/// `(n, m) -> [i][j] -> h^n_i · h^m_j`.
pub type ProductTable = BTreeMap<(i64, i64), Vec<Vec<SparseVec>>>;

/// How a table multiplies: `[f][g] = [f ∘ g]`, or the reverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductConvention {
    Composition,
    Opposite,
}

/// Graded algebra structure on cohomology in a finite range of degrees.
///
/// `products[(n, m)][i][j]` holds the coordinates of `h^n_i · h^m_j` in the
/// basis of degree `n + m`. Pairs whose product could not be formed inside
/// the computed window are listed in `unavailable`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedAlgebraTable {
    pub degrees: Vec<i64>,
    pub dims: BTreeMap<i64, usize>,
    pub representatives: BTreeMap<i64, Vec<SparseVec>>,
    pub products: ProductTable,
    pub unavailable: Vec<(i64, i64)>,
    pub unit: Option<SparseVec>,
    pub convention: ProductConvention,
}

impl GradedAlgebraTable {
    pub fn dim(&self, n: i64) -> usize {
        self.dims.get(&n).copied().unwrap_or(0)
    }

    pub fn product(&self, n: i64, i: usize, m: i64, j: usize) -> Option<&SparseVec> {
        Some(&self.products.get(&(n, m))?[i][j])
    }

    /// The same algebra with the factors of every product exchanged.
    pub fn opposite(&self) -> GradedAlgebraTable {
        let mut products = BTreeMap::new();
        for (&(n, m), table) in &self.products {
            let (dn, dm) = (self.dim(n), self.dim(m));
            let swapped = (0..dm)
                .map(|j| (0..dn).map(|i| table[i][j].clone()).collect())
                .collect();
            products.insert((m, n), swapped);
        }
        let convention = match self.convention {
            ProductConvention::Composition => ProductConvention::Opposite,
            ProductConvention::Opposite => ProductConvention::Composition,
        };
        GradedAlgebraTable {
            products,
            unavailable: self.unavailable.iter().map(|&(n, m)| (m, n)).collect(),
            convention,
            ..self.clone()
        }
    }

    /// Multiply two coordinate vectors of degrees `n` and `m`.
    pub fn multiply(&self, n: i64, x: &SparseVec, m: i64, y: &SparseVec) -> Option<SparseVec> {
        let table = self.products.get(&(n, m))?;
        let mut out = SparseVec::new();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                out = out.add_scaled(&table[i][j], &(a * b));
            }
        }
        Some(out)
    }

    /// First basis triple `(n,i), (m,j), (k,l)` violating associativity, among
    /// the products available in the table.
    pub fn find_associativity_failure(&self) -> Option<(ClassIndex, ClassIndex, ClassIndex)> {
        for &n in &self.degrees {
            for &m in &self.degrees {
                for &k in &self.degrees {
                    for i in 0..self.dim(n) {
                        for j in 0..self.dim(m) {
                            for l in 0..self.dim(k) {
                                let (x, y, z) =
                                    (SparseVec::unit(i), SparseVec::unit(j), SparseVec::unit(l));
                                let left = self
                                    .multiply(n, &x, m, &y)
                                    .and_then(|xy| self.multiply(n + m, &xy, k, &z));
                                let right = self
                                    .multiply(m, &y, k, &z)
                                    .and_then(|yz| self.multiply(n, &x, m + k, &yz));
                                if let (Some(a), Some(b)) = (left, right) {
                                    if a != b {
                                        return Some(((n, i), (m, j), (k, l)));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        None
    }

    /// The degree-zero part as an ordinary algebra with basis `h0, h1, ...`.
    pub fn degree_zero_algebra(&self) -> Result<FinAlgebra, ValidationError> {
        let n = self.dim(0);
        let unit = self
            .unit
            .clone()
            .ok_or(ValidationError::Shape("degree 0 has no unit class".into()))?;
        let table = self.products.get(&(0, 0)).ok_or(ValidationError::Shape(
            "degree 0 products are unavailable".into(),
        ))?;
        let products = (0..n)
            .flat_map(|i| (0..n).map(move |j| table[i][j].clone()))
            .collect();
        FinAlgebra::new((0..n).map(|i| format!("h{i}")).collect(), unit, products)
    }
}

/// Cohomology groups of a dg algebra together with the product table.
#[derive(Clone, Debug)]
pub struct CohomologyAlgebra {
    pub groups: BTreeMap<i64, Homology>,
    pub table: GradedAlgebraTable,
}

impl CohomologyAlgebra {
    /// Class coordinates of a cocycle of degree `n`.
    pub fn class_of(&self, n: i64, v: &SparseVec) -> Option<SparseVec> {
        let g = self.groups.get(&n)?;
        if !g.cycles.contains(v) {
            return None;
        }
        g.quotient.class_of(v).map(|c| SparseVec::from_dense(&c))
    }
}

/// Cohomology groups `H^n` for `n` in `degrees`.
pub fn cohomology_groups<D: DgAlgebra + ?Sized>(
    y: &D,
    degrees: &[i64],
) -> Result<BTreeMap<i64, Homology>, ComplexError> {
    let mut groups = BTreeMap::new();
    for &n in degrees {
        let dn = y.differential(n)?;
        let cocycles = kernel_basis(&dn);
        let boundaries = image_basis(&y.differential(n - 1)?);
        groups.insert(n, Homology::new(cocycles, &boundaries));
    }
    Ok(groups)
}

/// Products of the given representatives, expressed in cohomology classes.
pub fn product_table<D: DgAlgebra + ?Sized>(
    y: &D,
    groups: &BTreeMap<i64, Homology>,
    reps: &BTreeMap<i64, Vec<SparseVec>>,
) -> Result<(ProductTable, Vec<(i64, i64)>), ComplexError> {
    let mut products = BTreeMap::new();
    let mut unavailable = Vec::new();
    for (&n, xs) in reps {
        for (&m, ys) in reps {
            let Some(target) = groups.get(&(n + m)) else {
                continue;
            };
            let mut table = Vec::with_capacity(xs.len());
            let mut failed = false;
            'outer: for x in xs {
                let mut row = Vec::with_capacity(ys.len());
                for yv in ys {
                    match y.product(n, x, m, yv) {
                        Ok(p) => {
                            if !target.cycles.contains(&p) {
                                return Err(ComplexError::ProductNotClosed { left: n, right: m });
                            }
                            row.push(SparseVec::from_dense(
                                &target.quotient.class_of(&p).expect("cocycle has a class"),
                            ));
                        }
                        Err(ComplexError::WindowUnderflow { .. }) => {
                            failed = true;
                            break 'outer;
                        }
                        Err(e) => return Err(e),
                    }
                }
                table.push(row);
            }
            if failed {
                unavailable.push((n, m));
            } else {
                products.insert((n, m), table);
            }
        }
    }
    Ok((products, unavailable))
}

/// Cohomology `H^*(Y)` in `degrees` with its product structure.
pub fn cohomology_algebra<D: DgAlgebra + ?Sized>(
    y: &D,
    degrees: &[i64],
) -> Result<CohomologyAlgebra, ComplexError> {
    let groups = cohomology_groups(y, degrees)?;
    let reps: BTreeMap<i64, Vec<SparseVec>> = groups
        .iter()
        .map(|(n, g)| (*n, g.quotient.representatives().to_vec()))
        .collect();
    let (products, unavailable) = product_table(y, &groups, &reps)?;
    let unit = match (groups.get(&0), y.unit()) {
        (Some(g), Some(u)) if g.cycles.contains(&u) => {
            g.quotient.class_of(&u).map(|c| SparseVec::from_dense(&c))
        }
        _ => None,
    };
    let table = GradedAlgebraTable {
        degrees: degrees.to_vec(),
        dims: groups.iter().map(|(n, g)| (*n, g.dim())).collect(),
        representatives: reps,
        products,
        unavailable,
        unit,
        convention: ProductConvention::Composition,
    };
    Ok(CohomologyAlgebra { groups, table })
}
