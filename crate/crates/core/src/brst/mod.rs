//! The BRST model `A^opp ⊗ C(g + g*)` of the endomorphism complex of
//! `A ⊗ Λ(g)`, with differential the supercommutator by an odd element.

mod clifford;

use std::collections::BTreeMap;
use std::sync::Arc;

use num::Zero;

pub use clifford::{CliffordElement, Monomial, RewriteOrder};

use crate::algebra::{FinAlgebra, LieAction, ValidationError};
use crate::complexes::{
    cohomology_algebra, AMatrix, CochainClass, CohomologyAlgebra, ComplexError, DgAlgebra,
    EndComplex,
};
use crate::linalg::{int, one, sign, Matrix, Scalar, SparseVec};
use crate::resolutions::{ce_complex, subsets_of_size, ResolutionError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BrstError {
    #[error("Clifford ranks differ: {left} and {right}")]
    RankMismatch { left: usize, right: usize },
    #[error(transparent)]
    Validation(#[from] ValidationError),
    #[error(transparent)]
    Resolution(#[from] ResolutionError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("no multiple of the bracket term reproduces the Chevalley-Eilenberg differential")]
    NoNormalization,
}

/// Element of `A^opp ⊗ C(g + g*)`: coefficients on `(α, P, Q)` for `e_α ⊗ e_P e*_Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OppCliffordElement {
    algebra: Arc<FinAlgebra>,
    rank: usize,
    terms: BTreeMap<(usize, Monomial), Scalar>,
}

impl OppCliffordElement {
    pub fn zero(algebra: Arc<FinAlgebra>, rank: usize) -> Self {
        Self {
            algebra,
            rank,
            terms: BTreeMap::new(),
        }
    }

    /// `a ⊗ c`.
    pub fn tensor(algebra: Arc<FinAlgebra>, a: &SparseVec, c: &CliffordElement) -> Self {
        let mut out = Self::zero(algebra, c.rank());
        for (alpha, x) in a.iter() {
            for (m, y) in c.terms() {
                out.push(alpha, *m, x * y);
            }
        }
        out
    }

    pub fn basis(algebra: Arc<FinAlgebra>, rank: usize, alpha: usize, m: Monomial) -> Self {
        let mut out = Self::zero(algebra, rank);
        out.push(alpha, m, one());
        out
    }

    fn push(&mut self, alpha: usize, m: Monomial, c: Scalar) {
        let entry = self.terms.entry((alpha, m)).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(alpha, m));
        }
    }

    pub fn terms(&self) -> &BTreeMap<(usize, Monomial), Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((alpha, m), c) in &other.terms {
            out.push(*alpha, *m, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero(self.algebra.clone(), self.rank);
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|(k, x)| (*k, x * c)).collect();
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-one()))
    }

    /// `(a ⊗ c)(a' ⊗ c') = (a' a) ⊗ (c c')`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.algebra.clone(), self.rank);
        for ((alpha, m1), x) in &self.terms {
            for ((beta, m2), y) in &other.terms {
                let a = self.algebra.basis_product(*beta, *alpha);
                if a.is_zero() {
                    continue;
                }
                let c = CliffordElement::monomial(self.rank, *m1, x * y)
                    .mul(&CliffordElement::monomial(self.rank, *m2, one()))
                    .expect("same rank");
                for (gamma, s) in a.iter() {
                    for (m, t) in c.terms() {
                        out.push(gamma, *m, s * t);
                    }
                }
            }
        }
        out
    }

    /// Parity of the Clifford factor, when homogeneous.
    pub fn parity(&self) -> Option<bool> {
        let mut it = self
            .terms
            .keys()
            .map(|(_, m)| (m.0.count_ones() + m.1.count_ones()) % 2 == 1);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// `[x, y] = x y - (-1)^{|x||y|} y x` for homogeneous `x`, `y`.
    pub fn supercommutator(&self, other: &Self) -> Self {
        let odd = self.parity().unwrap_or(false) && other.parity().unwrap_or(false);
        self.mul(other)
            .sub(&other.mul(self).scale(&sign(odd as i64)))
    }
}

impl std::fmt::Display for OppCliffordElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut by_monomial: BTreeMap<Monomial, SparseVec> = BTreeMap::new();
        for ((alpha, m), c) in &self.terms {
            let v = by_monomial.entry(*m).or_default();
            *v = v.add(&SparseVec::single(*alpha, c.clone()));
        }
        let parts: Vec<String> = by_monomial
            .iter()
            .map(|(m, a)| {
                let mut word: Vec<String> = (0..self.rank)
                    .filter(|i| m.0 >> i & 1 == 1)
                    .map(|i| format!("e{}", i + 1))
                    .collect();
                word.extend(
                    (0..self.rank)
                        .filter(|i| m.1 >> i & 1 == 1)
                        .map(|i| format!("e*{}", i + 1)),
                );
                let c = if word.is_empty() {
                    "1".to_string()
                } else {
                    word.join("")
                };
                format!("({})⊗{c}", self.algebra.format_element(a))
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

fn degree_of(m: Monomial) -> i64 {
    m.1.count_ones() as i64 - m.0.count_ones() as i64
}

/// The odd element `D` with `[D, -]` the BRST differential.
#[derive(Clone, Debug)]
pub struct BrstElement {
    /// `Σ_i ρ(e_i) ⊗ e*_i`.
    pub linear: OppCliffordElement,
    /// `Σ_{i,j} 1 ⊗ e_{[i,j]} e*_i e*_j`, without any coefficient.
    pub bracket_term: OppCliffordElement,
    /// Coefficient `λ` of `bracket_term` fitted to the wedge-formula differential.
    pub lambda: Option<Scalar>,
    /// Coefficient of the bracket term in the literal operator expression.
    pub literal_coefficient: Scalar,
    /// `D = linear + λ · bracket_term`.
    pub d: OppCliffordElement,
    /// The operator of `D` equals the Chevalley-Eilenberg differential.
    pub matches_ce: bool,
}

impl BrstElement {
    /// `λ / literal`, when the bracket term is present.
    pub fn normalization_ratio(&self) -> Option<Scalar> {
        self.lambda.as_ref().map(|l| l / &self.literal_coefficient)
    }
}

/// Positions of subsets of each size in the exterior basis used by the CE complex.
fn exterior_positions(rank: usize) -> (Vec<Vec<u32>>, Vec<usize>) {
    let bases: Vec<Vec<u32>> = (0..=rank).map(|k| subsets_of_size(rank, k)).collect();
    let mut pos = vec![0; 1 << rank];
    for b in &bases {
        for (i, &m) in b.iter().enumerate() {
            pos[m as usize] = i;
        }
    }
    (bases, pos)
}

/// `Φ(x)` as a cochain of `End(A ⊗ Λ(g))` of degree `n`: `(u ⊗ ω) -> u a ⊗ c(ω)`.
fn realize(x: &OppCliffordElement, n: i64, end: &EndComplex) -> CochainClass {
    let rank = x.rank;
    let (bases, pos) = exterior_positions(rank);
    let mut entries: BTreeMap<usize, Vec<(usize, usize, SparseVec)>> = BTreeMap::new();
    for ((alpha, m), c) in &x.terms {
        debug_assert_eq!(degree_of(*m), n);
        for (s, basis) in bases.iter().enumerate() {
            for (row, &mask) in basis.iter().enumerate() {
                if let Some((neg, t)) = clifford::apply_monomial(*m, rank, mask) {
                    let coeff = if neg { -c.clone() } else { c.clone() };
                    entries.entry(s).or_default().push((
                        row,
                        pos[t as usize],
                        SparseVec::single(*alpha, coeff),
                    ));
                }
            }
        }
    }
    let src = end.source();
    let mut out = CochainClass::zero(n);
    for (s, e) in entries {
        let t = (s as i64 - n) as usize;
        let m = AMatrix::from_entries(src.fiber_dim(s), src.fiber_dim(t), e);
        if !m.is_zero() {
            out.components.insert(s, m);
        }
    }
    out
}

fn ce_end(act: &LieAction) -> Result<EndComplex, BrstError> {
    let x = Arc::new(ce_complex(act)?);
    let top = x.top();
    Ok(EndComplex::new(x, top)?)
}

/// Build `D`, fitting the bracket coefficient so that `[D, -]` realizes the
/// Chevalley-Eilenberg differential.
pub fn brst_element(act: &LieAction) -> Result<BrstElement, BrstError> {
    act.validate()?;
    let alg = act.target().clone();
    let g = act.lie();
    let n = g.dim();
    let mut linear = OppCliffordElement::zero(alg.clone(), n);
    for (i, r) in act.rho().iter().enumerate() {
        linear = linear.add(&OppCliffordElement::tensor(
            alg.clone(),
            r,
            &CliffordElement::annihilation(n, i),
        ));
    }
    let mut bracket = CliffordElement::zero(n);
    for i in 0..n {
        for j in 0..n {
            for (p, c) in g.basis_bracket(i, j).iter() {
                let term = CliffordElement::monomial(n, (1 << p, 0), c.clone())
                    .mul(&CliffordElement::annihilation(n, i))?
                    .mul(&CliffordElement::annihilation(n, j))?;
                bracket = bracket.add(&term);
            }
        }
    }
    let bracket_term = OppCliffordElement::tensor(alg.clone(), alg.unit(), &bracket);

    let end = ce_end(act)?;
    let d_ce = end.differential_cochain();
    let residual = d_ce.sub(&realize(&linear, 1, &end));
    let q = realize(&bracket_term, 1, &end);
    let lambda = if q.is_zero() {
        if !residual.is_zero() {
            return Err(BrstError::NoNormalization);
        }
        None
    } else {
        let (qv, rv) = (end.coords(&q)?, end.coords(&residual)?);
        let (k, qk) = qv.leading().map(|(k, x)| (k, x.clone())).expect("nonzero");
        let lambda = rv.get(k) / qk;
        if qv.scale(&lambda) != rv {
            return Err(BrstError::NoNormalization);
        }
        Some(lambda)
    };
    let d = match &lambda {
        Some(l) => linear.add(&bracket_term.scale(l)),
        None => linear.clone(),
    };
    let matches_ce = end.coords(&realize(&d, 1, &end))? == end.coords(&d_ce)?;
    Ok(BrstElement {
        linear,
        bracket_term,
        lambda,
        literal_coefficient: int(-1),
        d,
        matches_ce,
    })
}

/// `A^opp ⊗ C(g + g*)` graded by `#e* - #e`, with `𝐝 = [D, -]`.
#[derive(Clone, Debug)]
pub struct BrstComplex {
    pub action: LieAction,
    pub element: BrstElement,
    rank: usize,
    basis: BTreeMap<i64, Vec<Monomial>>,
}

impl BrstComplex {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn algebra(&self) -> &Arc<FinAlgebra> {
        self.action.target()
    }

    pub fn degrees(&self) -> Vec<i64> {
        (-(self.rank as i64)..=self.rank as i64).collect()
    }

    pub fn monomials(&self, n: i64) -> &[Monomial] {
        self.basis.get(&n).map(Vec::as_slice).unwrap_or(&[])
    }

    fn dim(&self, n: i64) -> usize {
        self.monomials(n).len() * self.algebra().dim()
    }

    /// Coordinate `k * dim A + α` for `e_α ⊗ (k-th monomial of degree n)`.
    pub fn element(&self, n: i64, coords: &SparseVec) -> OppCliffordElement {
        let da = self.algebra().dim();
        let mons = self.monomials(n);
        let mut out = OppCliffordElement::zero(self.algebra().clone(), self.rank);
        for (i, c) in coords.iter() {
            out.push(i % da, mons[i / da], c.clone());
        }
        out
    }

    pub fn coords(&self, n: i64, x: &OppCliffordElement) -> SparseVec {
        let da = self.algebra().dim();
        let mons = self.monomials(n);
        SparseVec::from_pairs(x.terms.iter().map(|((alpha, m), c)| {
            let k = mons
                .binary_search(m)
                .expect("element of the requested degree");
            (k * da + alpha, c.clone())
        }))
    }

    pub fn apply_differential(&self, x: &OppCliffordElement) -> OppCliffordElement {
        self.element.d.supercommutator(x)
    }

    /// `𝐝` on the whole space, in the basis ordered by degree and then coordinates.
    pub fn total_differential_matrix(&self) -> Matrix {
        let offsets: BTreeMap<i64, usize> = self
            .degrees()
            .iter()
            .scan(0, |acc, &n| {
                let o = *acc;
                *acc += self.dim(n);
                Some((n, o))
            })
            .collect();
        let total: usize = self.degrees().iter().map(|&n| self.dim(n)).sum();
        let mut cols = Vec::with_capacity(total);
        for n in self.degrees() {
            for i in 0..self.dim(n) {
                let dx = self.apply_differential(&self.element(n, &SparseVec::unit(i)));
                let v = if dx.is_zero() {
                    SparseVec::new()
                } else {
                    self.coords(n + 1, &dx).shifted(offsets[&(n + 1)])
                };
                cols.push(v);
            }
        }
        Matrix::from_columns(total, &cols)
    }

    /// First degree with `𝐝 𝐝 != 0`.
    pub fn find_d_squared_failure(&self) -> Option<i64> {
        self.degrees().into_iter().find(|&n| {
            let (d0, d1) = (
                self.differential(n).unwrap(),
                self.differential(n + 1).unwrap(),
            );
            !d1.mul(&d0).is_zero()
        })
    }

    /// First basis pair violating `𝐝(xy) = 𝐝x·y + (-1)^{|x|} x·𝐝y`.
    pub fn find_leibniz_failure(&self) -> Option<((i64, usize), (i64, usize))> {
        for n in self.degrees() {
            for m in self.degrees() {
                for i in 0..self.dim(n) {
                    for j in 0..self.dim(m) {
                        let x = self.element(n, &SparseVec::unit(i));
                        let y = self.element(m, &SparseVec::unit(j));
                        let lhs = self.apply_differential(&x.mul(&y));
                        let rhs = self
                            .apply_differential(&x)
                            .mul(&y)
                            .add(&x.mul(&self.apply_differential(&y)).scale(&sign(n)));
                        if lhs != rhs {
                            return Some(((n, i), (m, j)));
                        }
                    }
                }
            }
        }
        None
    }

    pub fn cohomology(&self) -> Result<CohomologyAlgebra, ComplexError> {
        cohomology_algebra(self, &self.degrees())
    }
}

impl DgAlgebra for BrstComplex {
    fn degree_dim(&self, n: i64) -> Result<usize, ComplexError> {
        Ok(self.dim(n))
    }

    fn differential(&self, n: i64) -> Result<Matrix, ComplexError> {
        let cols: Vec<SparseVec> = (0..self.dim(n))
            .map(|i| {
                let dx = self.apply_differential(&self.element(n, &SparseVec::unit(i)));
                if dx.is_zero() {
                    SparseVec::new()
                } else {
                    self.coords(n + 1, &dx)
                }
            })
            .collect();
        Ok(Matrix::from_columns(self.dim(n + 1), &cols))
    }

    fn product(
        &self,
        n: i64,
        x: &SparseVec,
        m: i64,
        y: &SparseVec,
    ) -> Result<SparseVec, ComplexError> {
        let p = self.element(n, x).mul(&self.element(m, y));
        Ok(if p.is_zero() {
            SparseVec::new()
        } else {
            self.coords(n + m, &p)
        })
    }

    fn unit(&self) -> Option<SparseVec> {
        let u = OppCliffordElement::tensor(
            self.algebra().clone(),
            self.algebra().unit(),
            &CliffordElement::one(self.rank),
        );
        Some(self.coords(0, &u))
    }
}

pub fn build_brst_complex(act: &LieAction) -> Result<BrstComplex, BrstError> {
    let element = brst_element(act)?;
    let rank = act.lie().dim();
    let mut basis: BTreeMap<i64, Vec<Monomial>> = BTreeMap::new();
    for p in 0..1u32 << rank {
        for q in 0..1u32 << rank {
            basis.entry(degree_of((p, q))).or_default().push((p, q));
        }
    }
    for v in basis.values_mut() {
        v.sort_unstable();
    }
    Ok(BrstComplex {
        action: act.clone(),
        element,
        rank,
        basis,
    })
}

/// Outcome of comparing the BRST complex with `End(A ⊗ Λ(g))` through `Φ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsomorphismReport {
    pub dims_match: bool,
    pub bijective: bool,
    pub intertwines: bool,
    pub algebra_map: bool,
    /// Charge of each monomial agrees with its End degree and reduces to its parity.
    pub grading: bool,
    pub brst_dims: BTreeMap<i64, usize>,
    pub end_dims: BTreeMap<i64, usize>,
    pub first_failure: Option<String>,
}

impl IsomorphismReport {
    pub fn passed(&self) -> bool {
        self.dims_match && self.bijective && self.intertwines && self.algebra_map && self.grading
    }
}

/// Check that `Φ: A^opp ⊗ C -> End_A(A ⊗ Λ(g))` is an isomorphism of dg algebras.
pub fn brst_isomorphism_check(act: &LieAction) -> Result<IsomorphismReport, BrstError> {
    let brst = build_brst_complex(act)?;
    let end = ce_end(act)?;
    let mut failure: Option<String> = None;
    let mut note = |msg: String| {
        if failure.is_none() {
            failure = Some(msg);
        }
    };
    let degrees = brst.degrees();
    let mut brst_dims = BTreeMap::new();
    let mut end_dims = BTreeMap::new();
    let (mut bijective, mut intertwines, mut algebra_map, mut grading) = (true, true, true, true);
    let mut images: BTreeMap<i64, Vec<SparseVec>> = BTreeMap::new();
    for &n in &degrees {
        let layout = end.layout(n)?;
        brst_dims.insert(n, brst.dim(n));
        end_dims.insert(n, layout.dim);
        let mut cols = Vec::with_capacity(brst.dim(n));
        for i in 0..brst.dim(n) {
            let x = brst.element(n, &SparseVec::unit(i));
            let (_, m) = *x.terms.keys().next().expect("basis element");
            if (degree_of(m).rem_euclid(2) == 1) != x.parity().expect("monomial") {
                grading = false;
                note(format!("degree {n} basis {i}: charge and parity disagree"));
            }
            cols.push(end.coords(&realize(&x, n, &end))?);
        }
        let mat = Matrix::from_columns(layout.dim, &cols);
        if crate::linalg::rank(&mat) != brst.dim(n) || layout.dim != brst.dim(n) {
            bijective = false;
            note(format!("degree {n}: Φ is not bijective"));
        }
        images.insert(n, cols);
    }
    let dims_match = brst_dims == end_dims;
    for &n in &degrees {
        if !degrees.contains(&(n + 1)) {
            continue;
        }
        let d_end = end.differential_matrix(n)?;
        for i in 0..brst.dim(n) {
            let x = brst.element(n, &SparseVec::unit(i));
            let dx = brst.apply_differential(&x);
            let lhs = if dx.is_zero() {
                SparseVec::new()
            } else {
                end.coords(&realize(&dx, n + 1, &end))?
            };
            if lhs != d_end.mul_vec(&images[&n][i]) {
                intertwines = false;
                note(format!(
                    "degree {n} basis {i}: Φ does not intertwine the differentials"
                ));
                break;
            }
        }
    }
    'pairs: for &n in &degrees {
        for &m in &degrees {
            if !degrees.contains(&(n + m)) {
                continue;
            }
            for i in 0..brst.dim(n) {
                for j in 0..brst.dim(m) {
                    let (x, y) = (
                        brst.element(n, &SparseVec::unit(i)),
                        brst.element(m, &SparseVec::unit(j)),
                    );
                    let xy = x.mul(&y);
                    let lhs = if xy.is_zero() {
                        SparseVec::new()
                    } else {
                        end.coords(&realize(&xy, n + m, &end))?
                    };
                    let rhs = end.product(n, &images[&n][i], m, &images[&m][j])?;
                    if lhs != rhs {
                        algebra_map = false;
                        note(format!(
                            "basis pair ({n},{i}), ({m},{j}): Φ is not multiplicative"
                        ));
                        break 'pairs;
                    }
                }
            }
        }
    }
    Ok(IsomorphismReport {
        dims_match,
        bijective,
        intertwines,
        algebra_map,
        grading,
        brst_dims,
        end_dims,
        first_failure: failure,
    })
}

#[cfg(test)]
mod tests;
