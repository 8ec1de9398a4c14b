use std::collections::BTreeMap;
use std::sync::Arc;

use super::{AMatrix, ComplexError, DgAlgebra, FreeAComplex};
use crate::linalg::{sign, Matrix, Scalar, SparseVec};

/// One `Hom_A(X_s, X_t)` summand of `End^n`, `t = s - n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Block {
    pub s: usize,
    pub t: usize,
    /// Coordinate offset of the block inside `End^n`.
    pub offset: usize,
    pub rows: usize,
    pub cols: usize,
}

/// Coordinate layout of one degree of an [`EndComplex`].
#[derive(Clone, Debug)]
pub struct Layout {
    pub degree: i64,
    pub blocks: Vec<Block>,
    pub dim: usize,
}

impl Layout {
    pub fn block(&self, s: usize) -> Option<&Block> {
        let first = self.blocks.first()?.s;
        self.blocks.get(s.checked_sub(first)?)
    }
}

/// A homogeneous element of `End_A(X)`: components `f_s: X_s -> X_{s-n}`.
/// Missing components are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CochainClass {
    pub degree: i64,
    pub components: BTreeMap<usize, AMatrix>,
}

impl CochainClass {
    pub fn zero(degree: i64) -> Self {
        Self {
            degree,
            components: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.components.values().all(AMatrix::is_zero)
    }

    /// The component on `X_s`, if nonzero.
    pub fn component(&self, s: usize) -> Option<&AMatrix> {
        self.components.get(&s).filter(|m| !m.is_zero())
    }

    /// Restriction to the single source degree `s` (bidegree `(s, n - s)` piece).
    pub fn piece(&self, s: usize) -> CochainClass {
        let mut out = CochainClass::zero(self.degree);
        if let Some(m) = self.component(s) {
            out.components.insert(s, m.clone());
        }
        out
    }

    pub fn add(&self, other: &CochainClass) -> CochainClass {
        assert_eq!(self.degree, other.degree);
        let mut components = self.components.clone();
        for (s, m) in &other.components {
            let sum = match components.get(s) {
                Some(x) => x.add(m),
                None => m.clone(),
            };
            components.insert(*s, sum);
        }
        components.retain(|_, m| !m.is_zero());
        CochainClass {
            degree: self.degree,
            components,
        }
    }

    pub fn scale(&self, c: &Scalar) -> CochainClass {
        let mut components: BTreeMap<usize, AMatrix> = self
            .components
            .iter()
            .map(|(s, m)| (*s, m.scale(c)))
            .collect();
        components.retain(|_, m| !m.is_zero());
        CochainClass {
            degree: self.degree,
            components,
        }
    }

    pub fn sub(&self, other: &CochainClass) -> CochainClass {
        self.add(&other.scale(&-sign(0)))
    }
}

/// The endomorphism dg algebra `End_A(X)` of a free A-complex, restricted to
/// source degrees `s <= window`.
///
/// For a truncated source complex this is `Hom_A(X_{<=L}, X)` with `X_{<=L}`
/// the brutal truncation; its cohomology agrees with that of `End_A(X)` in
/// low degrees, which the stability check in `hecke` confirms by comparing
/// consecutive windows.
#[derive(Clone, Debug)]
pub struct EndComplex {
    source: Arc<FreeAComplex>,
    window: usize,
}

impl EndComplex {
    pub fn new(source: Arc<FreeAComplex>, window: usize) -> Result<Self, ComplexError> {
        let window = if source.is_bounded() {
            window.min(source.top())
        } else {
            window
        };
        if !source.is_bounded() && window > source.top() {
            return Err(ComplexError::SourceTooShort {
                needed: window,
                available: source.top(),
            });
        }
        Ok(Self { source, window })
    }

    pub fn source(&self) -> &Arc<FreeAComplex> {
        &self.source
    }

    pub fn window(&self) -> usize {
        self.window
    }

    /// True when the source is bounded and fully covered by the window.
    pub fn is_exact(&self) -> bool {
        self.source.is_bounded() && self.window == self.source.top()
    }

    /// Lowest degree whose layout is available.
    pub fn min_degree(&self) -> i64 {
        self.window as i64 - self.source.top() as i64
    }

    pub fn max_degree(&self) -> i64 {
        self.window as i64
    }

    pub fn layout(&self, n: i64) -> Result<Layout, ComplexError> {
        let dim_a = self.source.algebra().dim();
        let mut blocks = Vec::new();
        let mut offset = 0;
        let first = n.max(0) as usize;
        for s in first..=self.window {
            let t = (s as i64 - n) as usize;
            if !self.source.has_degree(t) {
                return Err(ComplexError::SourceTooShort {
                    needed: t,
                    available: self.source.top(),
                });
            }
            let (rows, cols) = (self.source.fiber_dim(s), self.source.fiber_dim(t));
            blocks.push(Block {
                s,
                t,
                offset,
                rows,
                cols,
            });
            offset += rows * cols * dim_a;
        }
        Ok(Layout {
            degree: n,
            blocks,
            dim: offset,
        })
    }

    pub fn cochain(&self, n: i64, coords: &SparseVec) -> Result<CochainClass, ComplexError> {
        let layout = self.layout(n)?;
        let dim_a = self.source.algebra().dim();
        let mut out = CochainClass::zero(n);
        for b in &layout.blocks {
            let part = coords.slice(b.offset, b.offset + b.rows * b.cols * dim_a);
            if !part.is_zero() {
                out.components
                    .insert(b.s, AMatrix::from_coords(b.rows, b.cols, dim_a, &part));
            }
        }
        Ok(out)
    }

    /// Coordinates of `f` in `End^n`; components outside the window are dropped.
    pub fn coords(&self, f: &CochainClass) -> Result<SparseVec, ComplexError> {
        let layout = self.layout(f.degree)?;
        let dim_a = self.source.algebra().dim();
        let mut pairs = Vec::new();
        for (s, m) in &f.components {
            if let Some(b) = layout.block(*s) {
                pairs.extend(m.coords(dim_a).shifted(b.offset).entries().iter().cloned());
            }
        }
        Ok(SparseVec::from_pairs(pairs))
    }

    /// The identity endomorphism (degree 0).
    pub fn identity(&self) -> CochainClass {
        let unit = self.source.algebra().unit();
        let components = (0..=self.window)
            .map(|s| (s, AMatrix::identity(self.source.fiber_dim(s), unit)))
            .filter(|(_, m)| !m.is_zero())
            .collect();
        CochainClass {
            degree: 0,
            components,
        }
    }

    /// The differential of `X` as a degree `+1` element of `End`.
    pub fn differential_cochain(&self) -> CochainClass {
        let components = (1..=self.window)
            .filter(|&s| s <= self.source.top())
            .map(|s| (s, self.source.differential(s).clone()))
            .filter(|(_, m)| !m.is_zero())
            .collect();
        CochainClass {
            degree: 1,
            components,
        }
    }

    fn d_source(&self, s: usize) -> Option<&AMatrix> {
        (s >= 1 && s <= self.source.top()).then(|| self.source.differential(s))
    }

    /// `d'' f = d ∘ f`, components `d_{s-n} ∘ f_s`.
    pub fn d_inner(&self, f: &CochainClass) -> CochainClass {
        let alg = self.source.algebra();
        let mut out = CochainClass::zero(f.degree + 1);
        for (s, m) in &f.components {
            let t = (*s as i64 - f.degree) as usize;
            if let Some(d) = self.d_source(t) {
                out.components.insert(*s, m.then(d, alg));
            }
        }
        out.components.retain(|_, m| !m.is_zero());
        out
    }

    /// `d' f = -(-1)^n f ∘ d`, components `-(-1)^n f_{s-1} ∘ d_s`, for `s <= window`.
    pub fn d_outer(&self, f: &CochainClass) -> CochainClass {
        let alg = self.source.algebra();
        let c = -sign(f.degree);
        let mut out = CochainClass::zero(f.degree + 1);
        for (s, m) in &f.components {
            let s1 = s + 1;
            if s1 > self.window {
                continue;
            }
            if let Some(d) = self.d_source(s1) {
                out.components.insert(s1, d.then(m, alg).scale(&c));
            }
        }
        out.components.retain(|_, m| !m.is_zero());
        out
    }

    /// `(d' f, d'' f)` with `𝐝 f = d' f + d'' f`.
    pub fn partial_differentials(&self, f: &CochainClass) -> (CochainClass, CochainClass) {
        (self.d_outer(f), self.d_inner(f))
    }

    /// `𝐝 f = d ∘ f - (-1)^n f ∘ d`.
    pub fn end_differential(&self, f: &CochainClass) -> CochainClass {
        let (outer, inner) = self.partial_differentials(f);
        outer.add(&inner)
    }

    /// Composite `f ∘ g` (first `g`, then `f`), components `f_{s-m} ∘ g_s`.
    pub fn compose(
        &self,
        f: &CochainClass,
        g: &CochainClass,
    ) -> Result<CochainClass, ComplexError> {
        let alg = self.source.algebra();
        let mut out = CochainClass::zero(f.degree + g.degree);
        for (s, gm) in &g.components {
            if gm.is_zero() {
                continue;
            }
            let mid = (*s as i64 - g.degree) as usize;
            match f.components.get(&mid) {
                Some(fm) => {
                    out.components.insert(*s, gm.then(fm, alg));
                }
                None if mid > self.window && !self.is_exact() => {
                    return Err(ComplexError::WindowUnderflow {
                        needed: mid,
                        window: self.window,
                    });
                }
                None => {}
            }
        }
        out.components.retain(|_, m| !m.is_zero());
        Ok(out)
    }

    /// Matrix of `𝐝: End^n -> End^{n+1}` assembled entry by entry from the
    /// basis cochains `e_α` placed at `(i, j)` of block `(s, t)`.
    pub fn differential_matrix(&self, n: i64) -> Result<Matrix, ComplexError> {
        let src = self.layout(n)?;
        let tgt = self.layout(n + 1)?;
        let alg = self.source.algebra();
        let na = alg.dim();
        let c = -sign(n);
        let mut columns = Vec::with_capacity(src.dim);
        for b in &src.blocks {
            let inner = self.d_source(b.t).zip(tgt.block(b.s));
            let outer_d = if b.s < self.window {
                self.d_source(b.s + 1)
            } else {
                None
            };
            let outer = outer_d.map(|d| d.column_lists()).zip(tgt.block(b.s + 1));
            for i in 0..b.rows {
                for j in 0..b.cols {
                    for alpha in 0..na {
                        let mut pairs: Vec<(usize, Scalar)> = Vec::new();
                        if let Some((d, tb)) = inner {
                            for (k, x) in d.row(j) {
                                let base = tb.offset + (i * tb.cols + k) * na;
                                pairs.extend(
                                    alg.mul_basis_left(alpha, x)
                                        .iter()
                                        .map(|(beta, v)| (base + beta, v.clone())),
                                );
                            }
                        }
                        if let Some((cols, tb)) = &outer {
                            for (i2, x) in &cols[i] {
                                let base = tb.offset + (i2 * tb.cols + j) * na;
                                pairs.extend(
                                    alg.mul_basis_right(x, alpha)
                                        .iter()
                                        .map(|(beta, v)| (base + beta, v * &c)),
                                );
                            }
                        }
                        columns.push(SparseVec::from_pairs(pairs));
                    }
                }
            }
        }
        Ok(Matrix::from_columns(tgt.dim, &columns))
    }
}

/// `End_A(X)` on the source window `s <= window`.
pub fn build_end_complex(x: Arc<FreeAComplex>, window: usize) -> Result<EndComplex, ComplexError> {
    EndComplex::new(x, window)
}

impl DgAlgebra for EndComplex {
    fn degree_dim(&self, n: i64) -> Result<usize, ComplexError> {
        Ok(self.layout(n)?.dim)
    }

    fn differential(&self, n: i64) -> Result<Matrix, ComplexError> {
        self.differential_matrix(n)
    }

    fn product(
        &self,
        n: i64,
        x: &SparseVec,
        m: i64,
        y: &SparseVec,
    ) -> Result<SparseVec, ComplexError> {
        let f = self.cochain(n, x)?;
        let g = self.cochain(m, y)?;
        self.coords(&self.compose(&f, &g)?)
    }

    fn unit(&self) -> Option<SparseVec> {
        self.coords(&self.identity()).ok()
    }
}
