//! Module (co)homology, the actions of the Hecke algebra on it, and Dirac
//! reduction `V -> V^B` with its algebra of observables.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::{invariants, AugmentedSubalgebra, LeftModule};
use crate::complexes::{
    hom_cochain, hom_complex, tensor_complex, AMatrix, ChainComplex, CochainComplex, ComplexError,
    EndComplex, FreeAComplex, Homology,
};
use crate::hecke::HeckeError;
use crate::linalg::{kernel_basis, Matrix, SparseVec, Subspace};
use crate::resolutions::induced_bar_complex;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReductionError {
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Hecke(#[from] HeckeError),
    #[error("cochain of degree {degree} is not closed")]
    NotClosed { degree: i64 },
    #[error("complexes do not share generators up to degree {degree}")]
    IncompatibleSource { degree: usize },
}

fn ones(dim: usize) -> SparseVec {
    SparseVec::from_pairs((0..dim).map(|i| (i, crate::linalg::one())))
}

/// `H^*(V) = H^*(Hom_A(A ⊗_B X, V))` for a left `A`-module `V`.
#[derive(Clone, Debug)]
pub struct ModuleCohomology {
    pub source: Arc<FreeAComplex>,
    pub module: LeftModule,
    pub complex: CochainComplex,
    pub groups: BTreeMap<usize, Homology>,
}

impl ModuleCohomology {
    /// Above the top of a bounded source the groups are zero; record them up to `len`.
    fn padded(mut self, len: usize) -> Self {
        if self.source.is_bounded() {
            for n in self.groups.len()..len {
                self.groups
                    .insert(n, Homology::new(Subspace::zero(0), &Subspace::zero(0)));
            }
        }
        self
    }

    pub fn new(source: Arc<FreeAComplex>, module: LeftModule) -> Result<Self, ComplexError> {
        let complex = hom_complex(&source, &module);
        let top = complex.cohomology_dims().len();
        let groups = (0..top)
            .map(|n| Ok((n, complex.cohomology(n as i64)?)))
            .collect::<Result<_, ComplexError>>()?;
        Ok(Self {
            source,
            module,
            complex,
            groups,
        })
    }

    pub fn dims(&self) -> Vec<usize> {
        self.groups.values().map(Homology::dim).collect()
    }

    pub fn class_of(&self, n: usize, cocycle: &SparseVec) -> Option<SparseVec> {
        let g = self.groups.get(&n)?;
        if !g.cycles.contains(cocycle) {
            return None;
        }
        g.quotient
            .class_of(cocycle)
            .map(|c| SparseVec::from_dense(&c))
    }
}

/// `H^n(V)` for `n < L`, over the induced bar complex.
pub fn module_cohomology(
    b: &AugmentedSubalgebra,
    v: &LeftModule,
    l: usize,
) -> Result<ModuleCohomology, ComplexError> {
    Ok(ModuleCohomology::new(Arc::new(induced_bar_complex(b, l)), v.clone())?.padded(l))
}

/// `H_*(W) = H_*(W ⊗_A (A ⊗_B X))` for a right `A`-module `W` (a left module over `A^opp`).
#[derive(Clone, Debug)]
pub struct ModuleHomology {
    pub source: Arc<FreeAComplex>,
    pub module: LeftModule,
    pub complex: ChainComplex,
    pub groups: BTreeMap<usize, Homology>,
}

impl ModuleHomology {
    /// Above the top of a bounded source the groups are zero; record them up to `len`.
    fn padded(mut self, len: usize) -> Self {
        if self.source.is_bounded() {
            for n in self.groups.len()..len {
                self.groups
                    .insert(n, Homology::new(Subspace::zero(0), &Subspace::zero(0)));
            }
        }
        self
    }

    pub fn new(source: Arc<FreeAComplex>, module: LeftModule) -> Result<Self, ComplexError> {
        let complex = tensor_complex(&module, &source);
        let top = complex.homology_dims().len();
        let groups = (0..top)
            .map(|n| Ok((n, complex.homology(n as i64)?)))
            .collect::<Result<_, ComplexError>>()?;
        Ok(Self {
            source,
            module,
            complex,
            groups,
        })
    }

    pub fn dims(&self) -> Vec<usize> {
        self.groups.values().map(Homology::dim).collect()
    }

    pub fn class_of(&self, n: usize, cycle: &SparseVec) -> Option<SparseVec> {
        let g = self.groups.get(&n)?;
        if !g.cycles.contains(cycle) {
            return None;
        }
        g.quotient
            .class_of(cycle)
            .map(|c| SparseVec::from_dense(&c))
    }
}

/// `H_n(W)` for `n < L`, over the induced bar complex.
pub fn module_homology(
    b: &AugmentedSubalgebra,
    w: &LeftModule,
    l: usize,
) -> Result<ModuleHomology, ComplexError> {
    Ok(ModuleHomology::new(Arc::new(induced_bar_complex(b, l)), w.clone())?.padded(l))
}

/// Result of acting on a (co)homology class by a Hecke cocycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionOutcome {
    pub degree: i64,
    /// Empty when the target degree is negative (the group is zero).
    pub class: SparseVec,
    pub representative: SparseVec,
    /// The class is unchanged after adding a (co)boundary to either input.
    pub representative_independent: bool,
}

fn check_source(x: &FreeAComplex, end: &EndComplex, upto: usize) -> Result<(), ReductionError> {
    let y = end.source();
    for s in 0..=upto {
        if !x.has_degree(s) || !y.has_degree(s) || x.fiber_dim(s) != y.fiber_dim(s) {
            return Err(ReductionError::IncompatibleSource { degree: s });
        }
        if s >= 1 && s <= x.top().min(y.top()) && x.differential(s) != y.differential(s) {
            return Err(ReductionError::IncompatibleSource { degree: s });
        }
    }
    Ok(())
}

fn end_component(
    end: &EndComplex,
    m: i64,
    f: &SparseVec,
    s: usize,
) -> Result<AMatrix, ReductionError> {
    if s > end.window() {
        return Err(ComplexError::WindowUnderflow {
            needed: s,
            window: end.window(),
        }
        .into());
    }
    let c = end.cochain(m, f)?;
    let x = end.source();
    let t = (s as i64 - m) as usize;
    Ok(c.component(s)
        .cloned()
        .unwrap_or_else(|| AMatrix::zero(x.fiber_dim(s), x.fiber_dim(t))))
}

fn is_end_cocycle(end: &EndComplex, m: i64, f: &SparseVec) -> Result<bool, ComplexError> {
    Ok(end.differential_matrix(m)?.mul_vec(f).is_zero())
}

/// Some coboundary `𝐝g` in `End^m`, or zero when `End^{m-1}` is not available.
fn sample_end_coboundary(end: &EndComplex, m: i64) -> SparseVec {
    match (end.layout(m - 1), end.differential_matrix(m - 1)) {
        (Ok(layout), Ok(d)) => d.mul_vec(&ones(layout.dim)),
        _ => SparseVec::new(),
    }
}

/// `(φ ∘ f)(g_i) = Σ_j F[i][j] · φ(g_j)` for `F = f_s: X_s -> X_n`.
fn compose_hom(v: &LeftModule, phi: &SparseVec, f: &AMatrix) -> SparseVec {
    let dv = v.dim();
    let mut images = vec![SparseVec::new(); f.rows()];
    for (i, j, a) in f.entries() {
        let phi_j = phi.slice(j * dv, (j + 1) * dv);
        images[i] = images[i].add(&v.act_vec(a, &phi_j));
    }
    hom_cochain(&images, dv)
}

/// `w ⊗ g_i -> Σ_j (w · F[i][j]) ⊗ g_j` for `F = f_s: X_s -> X_t`.
fn apply_to_chain(w: &LeftModule, chain: &SparseVec, f: &AMatrix) -> SparseVec {
    let dw = w.dim();
    let mut out = SparseVec::new();
    for (i, j, a) in f.entries() {
        let piece = chain.slice(i * dw, (i + 1) * dw);
        if !piece.is_zero() {
            out = out.add(&w.act_vec(a, &piece).shifted(j * dw));
        }
    }
    out
}

/// The right action `[φ] · [f] = [φ ∘ f]`, `H^n(V) × Hk^m -> H^{n+m}(V)`.
pub fn act_on_cohomology(
    h: &ModuleCohomology,
    n: usize,
    phi: &SparseVec,
    end: &EndComplex,
    m: i64,
    f: &SparseVec,
) -> Result<ActionOutcome, ReductionError> {
    let target = n as i64 + m;
    if h.class_of(n, phi).is_none() {
        return Err(ReductionError::NotClosed { degree: n as i64 });
    }
    if !is_end_cocycle(end, m, f)? {
        return Err(ReductionError::NotClosed { degree: m });
    }
    if target < 0 {
        return Ok(ActionOutcome {
            degree: target,
            class: SparseVec::new(),
            representative: SparseVec::new(),
            representative_independent: true,
        });
    }
    let s = target as usize;
    if !h.groups.contains_key(&s) {
        return Err(ComplexError::DegreeOutOfRange { degree: target }.into());
    }
    if s >= h.complex.dims().len() {
        return Ok(ActionOutcome {
            degree: target,
            class: SparseVec::new(),
            representative: SparseVec::new(),
            representative_independent: true,
        });
    }
    check_source(&h.source, end, s)?;
    let compose = |phi: &SparseVec, f: &SparseVec| -> Result<SparseVec, ReductionError> {
        Ok(compose_hom(&h.module, phi, &end_component(end, m, f, s)?))
    };
    let representative = compose(phi, f)?;
    let class = h
        .class_of(s, &representative)
        .ok_or(ReductionError::NotClosed { degree: target })?;
    let phi_shift = if n >= 1 {
        h.complex
            .differential(n - 1)
            .mul_vec(&ones(h.complex.dims()[n - 1]))
    } else {
        SparseVec::new()
    };
    let f_shift = sample_end_coboundary(end, m);
    let shifted = compose(&phi.add(&phi_shift), &f.add(&f_shift))?;
    let representative_independent = h.class_of(s, &shifted).as_ref() == Some(&class);
    Ok(ActionOutcome {
        degree: target,
        class,
        representative,
        representative_independent,
    })
}

/// The left action `[f] · [c] = [(id ⊗ f)(c)]`, `Hk^n × H_m(W) -> H_{m-n}(W)`.
pub fn act_on_homology(
    h: &ModuleHomology,
    end: &EndComplex,
    n: i64,
    f: &SparseVec,
    m: usize,
    cycle: &SparseVec,
) -> Result<ActionOutcome, ReductionError> {
    let target = m as i64 - n;
    if h.class_of(m, cycle).is_none() {
        return Err(ReductionError::NotClosed { degree: m as i64 });
    }
    if !is_end_cocycle(end, n, f)? {
        return Err(ReductionError::NotClosed { degree: n });
    }
    if target < 0 {
        return Ok(ActionOutcome {
            degree: target,
            class: SparseVec::new(),
            representative: SparseVec::new(),
            representative_independent: true,
        });
    }
    let t = target as usize;
    if !h.groups.contains_key(&t) {
        return Err(ComplexError::DegreeOutOfRange { degree: target }.into());
    }
    check_source(&h.source, end, m)?;
    let apply = |c: &SparseVec, f: &SparseVec| -> Result<SparseVec, ReductionError> {
        Ok(apply_to_chain(&h.module, c, &end_component(end, n, f, m)?))
    };
    let representative = apply(cycle, f)?;
    let class = h
        .class_of(t, &representative)
        .ok_or(ReductionError::NotClosed { degree: target })?;
    let cycle_shift = if m + 1 < h.complex.len() {
        h.complex
            .differential(m + 1)
            .mul_vec(&ones(h.complex.dims()[m + 1]))
    } else {
        SparseVec::new()
    };
    let shifted = apply(
        &cycle.add(&cycle_shift),
        &f.add(&sample_end_coboundary(end, n)),
    )?;
    let representative_independent = h.class_of(t, &shifted).as_ref() == Some(&class);
    Ok(ActionOutcome {
        degree: target,
        class,
        representative,
        representative_independent,
    })
}

/// `A^B_V = { a ∈ A : [b, a] v = 0 for b ∈ B, v ∈ V^B }` and its operators on `V^B`.
#[derive(Clone, Debug)]
pub struct Observables {
    pub subspace: Subspace,
    pub invariants: Subspace,
    /// Products of spanning observables are observables.
    pub closed: bool,
    /// One matrix per basis element of `subspace`, in the basis of `invariants`.
    pub operators: Vec<Matrix>,
}

/// Operator of `a` on `V^B`, as coordinates in the invariant basis.
fn operator_on(inv: &Subspace, v: &LeftModule, a: &SparseVec) -> Option<Matrix> {
    let cols = inv
        .basis()
        .iter()
        .map(|x| {
            inv.coordinates(&v.act_vec(a, x))
                .map(|c| SparseVec::from_dense(&c))
        })
        .collect::<Option<Vec<_>>>()?;
    Some(Matrix::from_columns(inv.dim(), &cols))
}

pub fn dirac_observables(b: &AugmentedSubalgebra, v: &LeftModule) -> Observables {
    let alg = b.parent();
    let inv = invariants(v, b);
    let columns: Vec<SparseVec> = (0..alg.dim())
        .map(|alpha| {
            let e = SparseVec::unit(alpha);
            let mut stacked = Vec::new();
            let mut offset = 0;
            for x in b.inclusion() {
                let comm = alg.mul(x, &e).sub(&alg.mul(&e, x));
                for w in inv.basis() {
                    stacked.extend(
                        v.act_vec(&comm, w)
                            .shifted(offset)
                            .entries()
                            .iter()
                            .cloned(),
                    );
                    offset += v.dim();
                }
            }
            SparseVec::from_pairs(stacked)
        })
        .collect();
    let rows = b.inclusion().len() * inv.dim() * v.dim();
    let subspace = kernel_basis(&Matrix::from_columns(rows, &columns));
    let closed = subspace.basis().iter().all(|x| {
        subspace
            .basis()
            .iter()
            .all(|y| subspace.contains(&alg.mul(x, y)))
    });
    let operators = subspace
        .basis()
        .iter()
        .map(|a| operator_on(&inv, v, a).expect("observables preserve V^B"))
        .collect();
    Observables {
        subspace,
        invariants: inv,
        closed,
        operators,
    }
}

/// Containment of the `Hk^0` operators on `V^B = H^0(V)` in the observable operators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniversalReduction {
    pub invariants_dim: usize,
    pub h0_matches_invariants: bool,
    pub hecke_operators: usize,
    pub hecke_rank: usize,
    pub observable_rank: usize,
    pub contained: bool,
}

impl UniversalReduction {
    pub fn passed(&self) -> bool {
        self.h0_matches_invariants && self.contained
    }
}

/// Flatten an operator on `V^B` to the images of the invariant basis in `V`.
fn flatten(images: &[SparseVec], dv: usize) -> SparseVec {
    hom_cochain(images, dv)
}

/// Needs a source complex with a single generator in degree 0.
pub fn universal_reduction_check(
    b: &AugmentedSubalgebra,
    v: &LeftModule,
    end: &EndComplex,
    hk0_reps: &[SparseVec],
) -> Result<UniversalReduction, ReductionError> {
    let source = end.source().clone();
    if source.fiber_dim(0) != 1 {
        return Err(ReductionError::IncompatibleSource { degree: 0 });
    }
    let h = ModuleCohomology::new(source, v.clone())?;
    let obs = dirac_observables(b, v);
    let inv = &obs.invariants;
    let h0 = &h
        .groups
        .get(&0)
        .ok_or(ComplexError::DegreeOutOfRange { degree: 0 })?
        .cycles;
    let h0_matches_invariants = h0 == inv;
    let dv = v.dim();
    let mut hecke_ops = Vec::with_capacity(hk0_reps.len());
    for f in hk0_reps {
        let mut images = Vec::with_capacity(inv.dim());
        for w in inv.basis() {
            images.push(act_on_cohomology(&h, 0, w, end, 0, f)?.representative);
        }
        hecke_ops.push(flatten(&images, dv));
    }
    let obs_ops: Vec<SparseVec> = obs
        .subspace
        .basis()
        .iter()
        .map(|a| {
            flatten(
                &inv.basis()
                    .iter()
                    .map(|w| v.act_vec(a, w))
                    .collect::<Vec<_>>(),
                dv,
            )
        })
        .collect();
    let ambient = inv.dim() * dv;
    let hecke_span = Subspace::span(ambient, &hecke_ops);
    let obs_span = Subspace::span(ambient, &obs_ops);
    Ok(UniversalReduction {
        invariants_dim: inv.dim(),
        h0_matches_invariants,
        hecke_operators: hk0_reps.len(),
        hecke_rank: hecke_span.dim(),
        observable_rank: obs_span.dim(),
        contained: hecke_span.is_subspace_of(&obs_span),
    })
}

#[cfg(test)]
mod tests;
