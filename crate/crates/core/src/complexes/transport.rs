use std::collections::BTreeMap;

use super::{AMatrix, CochainClass, CohomologyAlgebra, ComplexError, EndComplex, FreeAComplex};
use crate::algebra::FinAlgebra;
use crate::linalg::{Matrix, SparseVec};

/// Degree-wise A-linear maps `X_s -> X'_{s+shift}`; `shift` is 0 for chain
/// maps and 1 for homotopies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMap {
    pub shift: usize,
    pub components: Vec<AMatrix>,
}

impl GradedMap {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn component(&self, s: usize) -> Option<&AMatrix> {
        self.components.get(s)
    }

    /// `other ∘ self` for two chain maps.
    pub fn then(&self, other: &GradedMap, alg: &FinAlgebra) -> GradedMap {
        assert_eq!((self.shift, other.shift), (0, 0));
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(f, g)| f.then(g, alg))
            .collect();
        GradedMap {
            shift: 0,
            components,
        }
    }
}

fn d_or_zero(x: &FreeAComplex, s: usize, rows: usize, cols: usize) -> AMatrix {
    if s >= 1 && s <= x.top() {
        x.differential(s).clone()
    } else {
        AMatrix::zero(rows, cols)
    }
}

/// First degree `s <= upto` where `f` fails to commute with the differentials.
pub fn find_chain_map_failure(
    x: &FreeAComplex,
    xp: &FreeAComplex,
    f: &GradedMap,
    upto: usize,
) -> Option<usize> {
    let alg = x.algebra();
    (1..=upto.min(f.len() - 1)).find(|&s| {
        let left = x.differential(s).then(&f.components[s - 1], alg);
        let right = f.components[s].then(xp.differential(s), alg);
        left != right
    })
}

/// First degree `s <= upto` where `g ∘ f - id != d h + h d` on `X_s`.
pub fn find_homotopy_failure(
    x: &FreeAComplex,
    f: &GradedMap,
    g: &GradedMap,
    h: &GradedMap,
    upto: usize,
) -> Option<usize> {
    let alg = x.algebra();
    (0..=upto).find(|&s| {
        let n = x.fiber_dim(s);
        let lhs = f.components[s]
            .then(&g.components[s], alg)
            .sub(&AMatrix::identity(n, alg.unit()));
        let up = h.components[s].then(&d_or_zero(x, s + 1, x.fiber_dim(s + 1), n), alg);
        let down = if s == 0 {
            AMatrix::zero(n, n)
        } else {
            x.differential(s).then(&h.components[s - 1], alg)
        };
        lhs != up.add(&down)
    })
}

/// Comparison of `H^*(End X)` and `H^*(End X')` along `F: X -> X'`, `F': X' -> X`.
#[derive(Clone, Debug)]
pub struct TransportReport {
    /// Matrix of `[f] -> [F f F']` per degree.
    pub forward: BTreeMap<i64, Matrix>,
    pub backward: BTreeMap<i64, Matrix>,
    pub dims_equal: bool,
    pub mutually_inverse: bool,
    pub multiplicative: bool,
}

impl TransportReport {
    pub fn passed(&self) -> bool {
        self.dims_equal && self.mutually_inverse && self.multiplicative
    }
}

/// `F ∘ f ∘ F'` with components `F'_s · f_s · F_{s-n}`.
pub fn conjugate(
    f: &CochainClass,
    into: &GradedMap,
    back: &GradedMap,
    alg: &FinAlgebra,
) -> Result<CochainClass, ComplexError> {
    let mut out = CochainClass::zero(f.degree);
    for (s, m) in &f.components {
        let t = (*s as i64 - f.degree) as usize;
        let (Some(b), Some(i)) = (back.component(*s), into.component(t)) else {
            return Err(ComplexError::SourceTooShort {
                needed: (*s).max(t),
                available: back.len().min(into.len()) - 1,
            });
        };
        let c = b.then(m, alg).then(i, alg);
        if !c.is_zero() {
            out.components.insert(*s, c);
        }
    }
    Ok(out)
}

fn class_matrix(
    from: &EndComplex,
    from_h: &CohomologyAlgebra,
    to: &EndComplex,
    to_h: &CohomologyAlgebra,
    n: i64,
    into: &GradedMap,
    back: &GradedMap,
) -> Result<Matrix, ComplexError> {
    let alg = from.source().algebra();
    let reps = &from_h.table.representatives[&n];
    let mut cols = Vec::with_capacity(reps.len());
    for r in reps {
        let f = from.cochain(n, r)?;
        let image = to.coords(&conjugate(&f, into, back, alg)?)?;
        let class = to_h
            .class_of(n, &image)
            .ok_or(ComplexError::NotACocycle { degree: n })?;
        cols.push(class);
    }
    Ok(Matrix::from_columns(to_h.table.dim(n), &cols))
}

/// Transport cohomology classes along a homotopy equivalence and check that
/// the induced maps are mutually inverse algebra isomorphisms.
pub fn chain_map_transport(
    y: &EndComplex,
    y_h: &CohomologyAlgebra,
    yp: &EndComplex,
    yp_h: &CohomologyAlgebra,
    f: &GradedMap,
    fp: &GradedMap,
) -> Result<TransportReport, ComplexError> {
    let mut forward = BTreeMap::new();
    let mut backward = BTreeMap::new();
    let mut dims_equal = true;
    let mut mutually_inverse = true;
    for &n in &y_h.table.degrees {
        if !yp_h.table.dims.contains_key(&n) {
            continue;
        }
        dims_equal &= y_h.table.dim(n) == yp_h.table.dim(n);
        let t = class_matrix(y, y_h, yp, yp_h, n, f, fp)?;
        let tp = class_matrix(yp, yp_h, y, y_h, n, fp, f)?;
        if dims_equal {
            let id = Matrix::identity(y_h.table.dim(n));
            mutually_inverse &= tp.mul(&t) == id && t.mul(&tp) == id;
        }
        forward.insert(n, t);
        backward.insert(n, tp);
    }
    let mut multiplicative = true;
    for (&(n, m), table) in &y_h.table.products {
        let (Some(tn), Some(tm), Some(tnm)) =
            (forward.get(&n), forward.get(&m), forward.get(&(n + m)))
        else {
            continue;
        };
        for (i, row) in table.iter().enumerate() {
            for (j, xy) in row.iter().enumerate() {
                let lhs = tnm.mul_vec(xy);
                let (ti, tj) = (
                    tn.mul_vec(&SparseVec::unit(i)),
                    tm.mul_vec(&SparseVec::unit(j)),
                );
                match yp_h.table.multiply(n, &ti, m, &tj) {
                    Some(rhs) => multiplicative &= lhs == rhs,
                    None => continue,
                }
            }
        }
    }
    Ok(TransportReport {
        forward,
        backward,
        dims_equal,
        mutually_inverse,
        multiplicative,
    })
}
