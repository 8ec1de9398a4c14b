use super::{AugmentedSubalgebra, FinAlgebra, LeftModule};
use crate::linalg::{kernel_basis, quotient, Matrix, Quotient, Scalar, SparseVec, Subspace};

/// The opposite algebra.
pub fn opposite(a: &FinAlgebra) -> FinAlgebra {
    a.opposite()
}

/// Smallest subspace containing `seed` and closed under left multiplication.
pub fn left_ideal(a: &FinAlgebra, seed: &Subspace) -> Subspace {
    assert_eq!(seed.ambient_dim(), a.dim());
    let mut current = seed.clone();
    loop {
        let mut gens = current.basis().to_vec();
        for v in current.basis() {
            for i in 0..a.dim() {
                gens.push(a.mul_basis_left(i, v));
            }
        }
        let next = Subspace::span(a.dim(), &gens);
        if next.dim() == current.dim() {
            return next;
        }
        current = next;
    }
}

/// Smallest unital subalgebra containing `gens`.
pub fn generated_subalgebra(a: &FinAlgebra, gens: &Subspace) -> Subspace {
    let mut vecs = gens.basis().to_vec();
    vecs.push(a.unit().clone());
    let mut current = Subspace::span(a.dim(), &vecs);
    loop {
        let mut all = current.basis().to_vec();
        for x in current.basis() {
            for y in current.basis() {
                all.push(a.mul(x, y));
            }
        }
        let next = Subspace::span(a.dim(), &all);
        if next.dim() == current.dim() {
            return next;
        }
        current = next;
    }
}

/// `A ⊗_B K = A/J` where `J` is the left ideal generated by `ker ε`.
#[derive(Clone, Debug)]
pub struct InducedModule {
    pub ideal: Subspace,
    pub quotient: Quotient,
    pub module: LeftModule,
}

impl InducedModule {
    /// Class coordinates of `a ∈ A` in `A/J`.
    pub fn class_of(&self, a: &SparseVec) -> SparseVec {
        SparseVec::from_dense(
            &self
                .quotient
                .class_of(a)
                .expect("every element of A has a class"),
        )
    }

    /// Canonical representative in `A` of class coordinates.
    pub fn lift(&self, v: &SparseVec) -> SparseVec {
        self.quotient.lift(&v.to_dense(self.quotient.dim()))
    }
}

pub fn induced_module(b: &AugmentedSubalgebra) -> InducedModule {
    let a = b.parent();
    let ideal = left_ideal(a, &b.kernel_subspace_of_parent());
    let q = quotient(&Subspace::full(a.dim()), &ideal).expect("J ⊆ A");
    let n = q.dim();
    let action = (0..a.dim())
        .map(|i| {
            let cols: Vec<SparseVec> = q
                .representatives()
                .iter()
                .map(|r| SparseVec::from_dense(&q.class_of(&a.mul_basis_left(i, r)).unwrap()))
                .collect();
            Matrix::from_columns(n, &cols)
        })
        .collect();
    let module = LeftModule::new_unchecked(a.clone(), n, action).expect("shapes agree");
    debug_assert!(module.validate().is_ok());
    InducedModule {
        ideal,
        quotient: q,
        module,
    }
}

/// Fixed space `{v : x v = eps_j v}` of the operators `actions[j]`.
pub fn augmented_fixed_space(dim: usize, actions: &[Matrix], eps: &[Scalar]) -> Subspace {
    let mut system = Matrix::zero(0, dim);
    for (m, e) in actions.iter().zip(eps) {
        system = system.vstack(&m.sub(&Matrix::identity(dim).scale(e)));
    }
    kernel_basis(&system)
}

/// `V^B = { v ∈ V : b v = ε(b) v }` for a module over `b.parent()`.
pub fn invariants(v: &LeftModule, b: &AugmentedSubalgebra) -> Subspace {
    let actions: Vec<Matrix> = b.inclusion().iter().map(|x| v.act(x)).collect();
    augmented_fixed_space(v.dim(), &actions, b.eps())
}

/// `V^B` for a module given directly over `B` (that is, over `b.algebra()`).
pub fn invariants_over_b(v: &LeftModule, b: &AugmentedSubalgebra) -> Subspace {
    assert_eq!(v.algebra().dim(), b.dim());
    augmented_fixed_space(v.dim(), v.action(), b.eps())
}
