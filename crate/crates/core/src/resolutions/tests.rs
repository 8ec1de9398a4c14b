use std::sync::Arc;

use super::*;
use crate::algebra::catalog::*;
use crate::algebra::{induced_module, AugmentedSubalgebra, LieAction, LieAlgebra};
use crate::complexes::{find_chain_map_failure, find_homotopy_failure, AMatrix, FreeAComplex};
use crate::linalg::{image_basis, int, kernel_basis, Matrix, SparseVec, Subspace};

fn e(i: usize) -> SparseVec {
    SparseVec::unit(i)
}

fn all_pairs() -> Vec<AugmentedSubalgebra> {
    vec![
        dual_numbers_pair(),
        m2_nilpotent_pair(),
        m2_borel_pair(),
        m2_trivial_pair(),
        exterior_pair(),
        m2_dual_pair(),
    ]
}

#[test]
fn trivial_subalgebra_gives_degree_zero_complex() {
    let x = induced_bar_complex(&m2_trivial_pair(), 4);
    assert_eq!(x.fiber_dims(), &[1]);
    assert!(x.is_bounded());
}

#[test]
fn dual_numbers_bar_matches_hand_matrices() {
    let x = induced_bar_complex(&dual_numbers_pair(), 3);
    let c = x.scalar_complex();
    assert_eq!(c.dims(), &[2, 2, 2, 2]);
    // basis (1⊗w, x⊗w): d(1[x..]) = x[..], d(x[x..]) = x^2 = 0
    let hand = Matrix::from_dense(&[vec![int(0), int(0)], vec![int(1), int(0)]]);
    for s in 1..=3 {
        assert_eq!(c.differential(s), hand, "d_{s}");
    }
    assert_eq!(c.homology_dims(), vec![1, 0, 0]);
}

#[test]
fn m2_nilpotent_bar_resolves_induced_module() {
    let b = m2_nilpotent_pair();
    let c = induced_bar_complex(&b, 4).scalar_complex();
    assert_eq!(c.homology_dims(), vec![2, 0, 0, 0]);
}

#[test]
fn degree_zero_homology_is_the_induced_module() {
    for b in all_pairs() {
        let x = induced_bar_complex(&b, 2);
        let ideal = if x.top() >= 1 {
            image_basis(&x.differential(1).to_scalar_matrix(b.parent()))
        } else {
            Subspace::zero(b.parent().dim())
        };
        assert_eq!(ideal, induced_module(&b).ideal);
    }
}

#[test]
fn bar_differential_squares_to_zero() {
    for b in all_pairs() {
        assert_eq!(bar_resolution(&b, 4).find_d_squared_failure(), None);
        assert_eq!(induced_bar_complex(&b, 4).find_d_squared_failure(), None);
        assert_eq!(two_sided_bar_complex(&b, 3).find_d_squared_failure(), None);
    }
}

#[test]
fn both_bar_routes_agree_literally() {
    for b in all_pairs() {
        let direct = induced_bar_complex(&b, 3);
        let via_a = collapse_right_factor(&two_sided_bar_complex(&b, 3), &b);
        let via_b = collapse_right_factor(&two_sided_bar_complex_over_b(&b, 3), &b)
            .map_entries(b.parent().clone(), |x| b.include(x));
        assert_eq!(via_a, direct);
        assert_eq!(via_b, direct);
    }
}

#[test]
fn bar_resolutions_validate() {
    for b in all_pairs() {
        let report = validate_resolution(&bar_resolution(&b, 4), &b, 4).unwrap();
        assert_eq!(report.homology_dims, vec![1, 0, 0, 0]);
    }
}

#[test]
fn koszul_resolution_validates() {
    let b = dual_numbers_pair();
    let k = periodic_resolution(&b, &e(1), 5);
    assert!(validate_resolution(&k, &b, 5).is_ok());
    // multiplication by 1 instead of x is exact in degree 0 too: H_0 = 0
    let bad = periodic_resolution(&b, &e(0), 3);
    assert!(matches!(
        validate_resolution(&bad, &b, 3),
        Err(ResolutionError::NotAResolution { degree: 0, .. })
    ));
}

#[test]
fn zero_differential_fails_at_degree_one() {
    let b = AugmentedSubalgebra::trivial(Arc::new(
        crate::algebra::FinAlgebra::from_triples(vec!["1".into()], e(0), &[(0, 0, 0, int(1))])
            .unwrap(),
    ));
    let x = FreeAComplex::new(
        b.algebra().clone(),
        vec![1, 1],
        vec![AMatrix::zero(1, 1)],
        true,
    )
    .unwrap();
    let err = validate_resolution(&x, &b, 2).unwrap_err();
    assert!(
        matches!(err, ResolutionError::NotAResolution { degree: 1, .. }),
        "{err}"
    );
}

#[test]
fn ce_abelian_zero_action() {
    let act = LieAction::new(
        Arc::new(LieAlgebra::abelian(2)),
        Arc::new(matrix_algebra(2)),
        vec![SparseVec::new(); 2],
    )
    .unwrap();
    let x = ce_complex(&act).unwrap();
    assert_eq!(x.fiber_dims(), &[1, 2, 1]);
    assert!(x.differentials().iter().all(AMatrix::is_zero));
}

#[test]
fn ce_rank_one_on_m2() {
    let x = ce_complex(&m2_rank1_action()).unwrap();
    assert_eq!(x.fiber_dims(), &[1, 1]);
    let c = x.scalar_complex();
    // a·E12 = 0 iff the first column of a vanishes: kernel spanned by E12, E22
    let a = matrix_algebra(2);
    let hand_kernel = Subspace::span(4, &[e(1), e(3)]);
    assert_eq!(kernel_basis(&a.right_mult(&e(1))), hand_kernel);
    assert_eq!(c.differential(1), a.right_mult(&e(1)));
    assert_eq!(c.homology_dims(), vec![2, 2]);
}

#[test]
fn ce_affine_squares_to_zero() {
    let act = m2_affine_action();
    // direct matrix arithmetic: [ρ(e1), ρ(e2)] = ρ(e2)
    let a = act.target();
    let (h, n) = (&act.rho()[0], &act.rho()[1]);
    assert_eq!(a.mul(h, n).sub(&a.mul(n, h)), n.clone());
    let x = ce_complex(&act).unwrap();
    assert_eq!(x.fiber_dims(), &[1, 2, 1]);
    assert_eq!(x.find_d_squared_failure(), None);
    assert!(!x.differential(2).is_zero());
}

#[test]
fn ce_rejects_invalid_action() {
    let bad = LieAction::new_unchecked(
        Arc::new(affine_lie()),
        Arc::new(matrix_algebra(2)),
        vec![e(3), e(1)],
    )
    .unwrap();
    assert!(matches!(
        ce_complex(&bad),
        Err(ResolutionError::InvalidLieAction(_))
    ));
}

#[test]
fn bar_and_koszul_are_homotopy_equivalent() {
    let b = dual_numbers_pair();
    let bar = bar_resolution(&b, 6);
    let kos = periodic_resolution(&b, &e(1), 6);
    let unit = b.algebra().unit();
    let f = lift_chain_map(&bar, &kos, AMatrix::identity(1, unit), 5).unwrap();
    let fp = lift_chain_map(&kos, &bar, AMatrix::identity(1, unit), 5).unwrap();
    assert_eq!(find_chain_map_failure(&bar, &kos, &f, 5), None);
    assert_eq!(find_chain_map_failure(&kos, &bar, &fp, 5), None);
    let h = lift_homotopy(&bar, &defect(&bar, &f, &fp), 4).unwrap();
    assert_eq!(find_homotopy_failure(&bar, &f, &fp, &h, 4), None);
    let hp = lift_homotopy(&kos, &defect(&kos, &fp, &f), 4).unwrap();
    assert_eq!(find_homotopy_failure(&kos, &fp, &f, &hp, 4), None);
}

#[test]
fn padding_adds_a_contractible_summand() {
    let b = dual_numbers_pair();
    let x = bar_resolution(&b, 5);
    let p = pad_with_contractible(&x, 1).unwrap();
    assert_eq!(p.fiber_dims(), &[1, 2, 2, 1, 1, 1]);
    assert_eq!(p.find_d_squared_failure(), None);
    assert!(validate_resolution(&p, &b, 5).is_ok());
    assert!(pad_with_contractible(&x, 5).is_err());
}

#[test]
fn subsets_are_ordered() {
    assert_eq!(subsets_of_size(3, 2), vec![0b011, 0b101, 0b110]);
    assert_eq!(subsets_of_size(3, 0), vec![0]);
    // lexicographic, not numeric: {0,3} precedes {1,2}
    assert_eq!(
        subsets_of_size(4, 2),
        vec![0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100]
    );
}

#[test]
fn ce_complex_in_dimension_four() {
    let act = LieAction::new(
        Arc::new(LieAlgebra::abelian(4)),
        Arc::new(matrix_algebra(2)),
        vec![e(1), SparseVec::new(), SparseVec::new(), SparseVec::new()],
    )
    .unwrap();
    let x = ce_complex(&act).unwrap();
    assert_eq!(x.fiber_dims(), &[1, 4, 6, 4, 1]);
    assert_eq!(x.find_d_squared_failure(), None);
}
