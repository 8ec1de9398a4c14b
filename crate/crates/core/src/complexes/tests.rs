use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::algebra::catalog::{dual_numbers, matrix_algebra};
use crate::algebra::FinAlgebra;
use crate::linalg::{int, sign, Matrix, SparseVec};

fn e(i: usize) -> SparseVec {
    SparseVec::unit(i)
}

/// `... -> A -x-> A -x-> A` over the dual numbers, `len` degrees.
fn dual_periodic(len: usize) -> FreeAComplex {
    let a = Arc::new(dual_numbers());
    let d = (1..len)
        .map(|_| AMatrix::from_entries(1, 1, [(0, 0, e(1))]))
        .collect();
    FreeAComplex::new(a, vec![1; len], d, false).unwrap()
}

fn random_element(rng: &mut ChaCha8Rng, dim: usize) -> SparseVec {
    SparseVec::from_pairs((0..dim).map(|i| (i, int(rng.gen_range(-2..3)))))
}

fn random_cochain(rng: &mut ChaCha8Rng, y: &EndComplex, n: i64) -> CochainClass {
    let dim = y.degree_dim(n).unwrap();
    y.cochain(n, &random_element(rng, dim)).unwrap()
}

#[test]
fn chain_complex_homology_small() {
    // C_1 = K^2 -> C_0 = K, d = [1 1]; H_0 = 0, H_1 = K
    let c = ChainComplex::new(
        vec![1, 2],
        vec![Matrix::from_dense(&[vec![int(1), int(1)]])],
        false,
    );
    assert_eq!(c.homology_dims(), vec![0, 1]);
    assert!(c.homology(2).is_err());
    let t = ChainComplex::new(
        vec![1, 2],
        vec![Matrix::from_dense(&[vec![int(1), int(1)]])],
        true,
    );
    assert_eq!(t.homology_dims(), vec![0]);
}

#[test]
fn amatrix_composition_follows_row_convention() {
    let a = matrix_algebra(2);
    // M: 1 row -> 1 col with entry E12; N: entry E21. "M then N" has entry E12·E21 = E11.
    let m = AMatrix::from_entries(1, 1, [(0, 0, e(1))]);
    let n = AMatrix::from_entries(1, 1, [(0, 0, e(2))]);
    assert_eq!(m.then(&n, &a).get(0, 0), e(0));
    // Scalar realizations compose in the usual (column) order.
    let sm = m.to_scalar_matrix(&a);
    let sn = n.to_scalar_matrix(&a);
    assert_eq!(m.then(&n, &a).to_scalar_matrix(&a), sn.mul(&sm));
}

#[test]
fn amatrix_coords_roundtrip() {
    let m = AMatrix::from_entries(
        2,
        3,
        [
            (0, 2, e(1)),
            (1, 0, SparseVec::from_pairs(vec![(0, int(2)), (3, int(-1))])),
        ],
    );
    assert_eq!(AMatrix::from_coords(2, 3, 4, &m.coords(4)), m);
    let rows: Vec<SparseVec> = (0..2).map(|i| m.row_vector(i, 4)).collect();
    assert_eq!(AMatrix::from_row_vectors(3, 4, &rows), m);
}

#[test]
fn differential_matrix_matches_composition_route() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let y = EndComplex::new(Arc::new(dual_periodic(6)), 4).unwrap();
    for n in -1..=3 {
        let dm = y.differential_matrix(n).unwrap();
        for _ in 0..5 {
            let f = random_cochain(&mut rng, &y, n);
            let via_compose = y.coords(&y.end_differential(&f)).unwrap();
            assert_eq!(
                dm.mul_vec(&y.coords(&f).unwrap()),
                via_compose,
                "degree {n}"
            );
        }
    }
}

#[test]
fn end_differential_squares_to_zero() {
    let y = EndComplex::new(Arc::new(dual_periodic(6)), 4).unwrap();
    for n in -1..=2 {
        let d0 = y.differential_matrix(n).unwrap();
        let d1 = y.differential_matrix(n + 1).unwrap();
        assert!(d1.mul(&d0).is_zero(), "degree {n}");
    }
}

#[test]
fn partial_differentials_sum_and_square() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let y = EndComplex::new(Arc::new(dual_periodic(7)), 5).unwrap();
    for n in 0..=2 {
        let f = random_cochain(&mut rng, &y, n);
        let (outer, inner) = y.partial_differentials(&f);
        assert_eq!(outer.add(&inner), y.end_differential(&f));
        assert!(y.d_inner(&y.d_inner(&f)).is_zero());
        assert!(y.d_outer(&y.d_outer(&f)).is_zero());
        let anti = y.d_outer(&y.d_inner(&f)).add(&y.d_inner(&y.d_outer(&f)));
        assert!(anti.is_zero());
    }
}

#[test]
fn leibniz_rule_for_composition() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let y = EndComplex::new(Arc::new(dual_periodic(8)), 6).unwrap();
    for (n, m) in [(0, 0), (1, 0), (0, 1), (1, 1), (2, 1)] {
        let f = random_cochain(&mut rng, &y, n);
        let g = random_cochain(&mut rng, &y, m);
        let lhs = y.end_differential(&y.compose(&f, &g).unwrap());
        let rhs = y.compose(&y.end_differential(&f), &g).unwrap().add(
            &y.compose(&f, &y.end_differential(&g))
                .unwrap()
                .scale(&sign(n)),
        );
        assert_eq!(
            y.coords(&lhs).unwrap(),
            y.coords(&rhs).unwrap(),
            "({n},{m})"
        );
    }
}

#[test]
fn ext_of_dual_numbers_is_polynomial() {
    // Ext_{K[x]/x^2}(K, K) = K[t], |t| = 1, computed from the periodic resolution.
    let y = EndComplex::new(Arc::new(dual_periodic(7)), 5).unwrap();
    let h = cohomology_algebra(&y, &[0, 1, 2, 3]).unwrap();
    assert_eq!(
        h.table.dims.values().copied().collect::<Vec<_>>(),
        vec![1, 1, 1, 1]
    );
    let t = h.table.product(1, 0, 1, 0).unwrap();
    assert!(!t.is_zero());
    assert!(!h.table.product(1, 0, 2, 0).unwrap().is_zero());
    assert_eq!(h.table.unit, Some(e(0)));
    assert!(h.table.find_associativity_failure().is_none());
    let h0 = h.table.degree_zero_algebra().unwrap();
    assert_eq!(h0.dim(), 1);
}

#[test]
fn composition_beyond_window_is_reported() {
    let y = EndComplex::new(Arc::new(dual_periodic(6)), 3).unwrap();
    let f = y.identity();
    let g = CochainClass {
        degree: -1,
        components: [(3, AMatrix::from_entries(1, 1, [(0, 0, e(0))]))].into(),
    };
    assert!(matches!(
        y.compose(&f, &g),
        Err(ComplexError::WindowUnderflow {
            needed: 4,
            window: 3
        })
    ));
}

#[test]
fn source_too_short() {
    assert!(matches!(
        EndComplex::new(Arc::new(dual_periodic(3)), 4),
        Err(ComplexError::SourceTooShort { .. })
    ));
    let y = EndComplex::new(Arc::new(dual_periodic(4)), 3).unwrap();
    assert!(y.layout(-1).is_err());
    assert!(y.layout(0).is_ok());
}

#[test]
fn bounded_complex_end_is_exact() {
    // 0 -> A -id-> A -> 0 over M_2 is contractible: End has no cohomology.
    let a: Arc<FinAlgebra> = Arc::new(matrix_algebra(2));
    let x = FreeAComplex::new(
        a.clone(),
        vec![1, 1],
        vec![AMatrix::identity(1, a.unit())],
        true,
    )
    .unwrap();
    let y = EndComplex::new(Arc::new(x), 10).unwrap();
    assert!(y.is_exact());
    assert_eq!(y.window(), 1);
    let h = cohomology_algebra(&y, &[-1, 0, 1]).unwrap();
    assert!(h.table.dims.values().all(|&d| d == 0));
}

#[test]
fn identity_transport_is_trivial() {
    let x = Arc::new(dual_periodic(6));
    let y = EndComplex::new(x.clone(), 4).unwrap();
    let h = cohomology_algebra(&y, &[0, 1, 2]).unwrap();
    let id = GradedMap {
        shift: 0,
        components: (0..6)
            .map(|_| AMatrix::identity(1, x.algebra().unit()))
            .collect(),
    };
    assert_eq!(find_chain_map_failure(&x, &x, &id, 5), None);
    let r = chain_map_transport(&y, &h, &y, &h, &id, &id).unwrap();
    assert!(r.passed());
}
