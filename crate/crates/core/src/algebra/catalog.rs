//! Small algebras used throughout the tests, benchmarks and shipped inputs.

use std::sync::Arc;

use super::{AugmentedSubalgebra, FinAlgebra, LieAction, LieAlgebra};
use crate::linalg::{int, one, ratio, zero, SparseVec};

/// `K[x]/(x^2)` with basis `1, x`.
pub fn dual_numbers() -> FinAlgebra {
    let triples = vec![(0, 0, 0, int(1)), (0, 1, 1, int(1)), (1, 0, 1, int(1))];
    FinAlgebra::from_triples(vec!["1".into(), "x".into()], SparseVec::unit(0), &triples).unwrap()
}

/// `M_n(K)` with basis `E11, E12, ..., Enn` in row-major order.
pub fn matrix_algebra(n: usize) -> FinAlgebra {
    let idx = |i: usize, j: usize| i * n + j;
    let labels = (0..n)
        .flat_map(|i| (0..n).map(move |j| format!("E{}{}", i + 1, j + 1)))
        .collect();
    let mut triples = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                triples.push((idx(i, j), idx(j, l), idx(i, l), int(1)));
            }
        }
    }
    let unit = SparseVec::from_pairs((0..n).map(|i| (idx(i, i), int(1))));
    FinAlgebra::from_triples(labels, unit, &triples).unwrap()
}

/// Exterior algebra `Λ(K^n)`, basis indexed by subsets in binary order.
pub fn exterior_algebra(n: usize) -> FinAlgebra {
    let size = 1usize << n;
    let labels = (0..size)
        .map(|m| {
            if m == 0 {
                "1".to_string()
            } else {
                (0..n)
                    .filter(|i| m >> i & 1 == 1)
                    .map(|i| format!("x{}", i + 1))
                    .collect::<Vec<_>>()
                    .join("^")
            }
        })
        .collect();
    let mut triples = Vec::new();
    for a in 0..size {
        for b in 0..size {
            if a & b != 0 {
                continue;
            }
            // sign of merging sorted a then b: count pairs (i in a, j in b) with i > j
            let mut inv = 0;
            for i in 0..n {
                if a >> i & 1 == 1 {
                    inv += (b & ((1 << i) - 1)).count_ones();
                }
            }
            triples.push((a, b, a | b, if inv % 2 == 0 { int(1) } else { int(-1) }));
        }
    }
    FinAlgebra::from_triples(labels, SparseVec::unit(0), &triples).unwrap()
}

/// Tensor product algebra `A ⊗ C`, basis `a_i ⊗ c_j` at index `i * dim C + j`.
pub fn tensor_product(a: &FinAlgebra, c: &FinAlgebra) -> FinAlgebra {
    let (n, m) = (a.dim(), c.dim());
    let labels = a
        .labels()
        .iter()
        .flat_map(|x| {
            c.labels().iter().map(move |y| {
                if y == "1" {
                    x.clone()
                } else {
                    format!("{x}{y}")
                }
            })
        })
        .collect();
    let mut triples = Vec::new();
    for i in 0..n {
        for j in 0..m {
            for k in 0..n {
                for l in 0..m {
                    for (p, x) in a.basis_product(i, k).iter() {
                        for (q, y) in c.basis_product(j, l).iter() {
                            triples.push((i * m + j, k * m + l, p * m + q, x * y));
                        }
                    }
                }
            }
        }
    }
    let unit = SparseVec::from_pairs(
        a.unit()
            .iter()
            .flat_map(|(i, x)| c.unit().iter().map(move |(j, y)| (i * m + j, x * y)))
            .collect::<Vec<_>>(),
    );
    FinAlgebra::from_triples(labels, unit, &triples).unwrap()
}

fn e(i: usize) -> SparseVec {
    SparseVec::unit(i)
}

/// `A = B = K[x]/(x^2)`, `ε(x) = 0`.
pub fn dual_numbers_pair() -> AugmentedSubalgebra {
    AugmentedSubalgebra::whole(Arc::new(dual_numbers()), vec![one(), zero()]).unwrap()
}

/// `A = M_2`, `B = span{1, E12}`, `ε(E12) = 0`.
pub fn m2_nilpotent_pair() -> AugmentedSubalgebra {
    let a = Arc::new(matrix_algebra(2));
    let unit = a.unit().clone();
    AugmentedSubalgebra::new(a, vec![unit, e(1)], vec![one(), zero()]).unwrap()
}

/// `A = M_2`, `B` = upper triangular matrices, `ε(E11) = 1`, `ε(E12) = 0`.
pub fn m2_borel_pair() -> AugmentedSubalgebra {
    let a = Arc::new(matrix_algebra(2));
    let unit = a.unit().clone();
    AugmentedSubalgebra::new(a, vec![unit, e(0), e(1)], vec![one(), one(), zero()]).unwrap()
}

/// `A = M_2`, `B = K·1`.
pub fn m2_trivial_pair() -> AugmentedSubalgebra {
    AugmentedSubalgebra::trivial(Arc::new(matrix_algebra(2)))
}

/// `A = Λ(K^2)`, `B = span{1, x1}`.
pub fn exterior_pair() -> AugmentedSubalgebra {
    let a = Arc::new(exterior_algebra(2));
    AugmentedSubalgebra::new(a, vec![e(0), e(1)], vec![one(), zero()]).unwrap()
}

/// `A = M_2(K[x]/(x^2))` (dimension 8), `B = span{1, x}` central.
pub fn m2_dual_pair() -> AugmentedSubalgebra {
    let a = Arc::new(tensor_product(&matrix_algebra(2), &dual_numbers()));
    let unit = a.unit().clone();
    // x = (E11 + E22) ⊗ x
    let x = SparseVec::from_pairs(vec![(1, int(1)), (7, int(1))]);
    AugmentedSubalgebra::new(a, vec![unit, x], vec![one(), zero()]).unwrap()
}

/// Two-dimensional non-abelian Lie algebra `[e1, e2] = e2`.
pub fn affine_lie() -> LieAlgebra {
    LieAlgebra::from_triples(2, &[(0, 1, 1, int(1)), (1, 0, 1, int(-1))]).unwrap()
}

fn action(lie: LieAlgebra, a: FinAlgebra, rho: Vec<SparseVec>) -> LieAction {
    LieAction::new(Arc::new(lie), Arc::new(a), rho).unwrap()
}

/// Rank one: `ρ(e) = E12` on `M_2`.
pub fn m2_rank1_action() -> LieAction {
    action(LieAlgebra::abelian(1), matrix_algebra(2), vec![e(1)])
}

/// `ρ(e1) = (E11 - E22)/2`, `ρ(e2) = E12` on `M_2`.
pub fn m2_affine_action() -> LieAction {
    let h: SparseVec = SparseVec::from_pairs(vec![(0, ratio(1, 2)), (3, ratio(-1, 2))]);
    action(affine_lie(), matrix_algebra(2), vec![h, e(1)])
}

/// Rank one: `ρ(e) = x` on the dual numbers.
pub fn dual_rank1_action() -> LieAction {
    action(LieAlgebra::abelian(1), dual_numbers(), vec![e(1)])
}

/// `ρ(e1) = x`, `ρ(e2) = 0` on the dual numbers.
pub fn dual_affine_action() -> LieAction {
    action(affine_lie(), dual_numbers(), vec![e(1), SparseVec::new()])
}
