use std::sync::Arc;

use proptest::prelude::{any, prop_assert_eq, proptest, ProptestConfig};

use super::*;
use crate::algebra::catalog::*;
use crate::algebra::LieAlgebra;
use crate::complexes::cohomology_groups;
use crate::linalg::ratio;

fn gen(rank: usize, i: usize, star: bool) -> CliffordElement {
    if star {
        CliffordElement::annihilation(rank, i)
    } else {
        CliffordElement::creation(rank, i)
    }
}

fn word(rank: usize, w: &[(usize, bool)], strategy: RewriteOrder) -> CliffordElement {
    w.iter().fold(CliffordElement::one(rank), |acc, &(i, s)| {
        acc.mul_with(&gen(rank, i, s), strategy).unwrap()
    })
}

/// Rank of a dense rational matrix by plain Gaussian elimination.
fn dense_rank(m: &Matrix) -> usize {
    let mut a = m.to_dense();
    let (rows, cols) = (m.rows(), m.cols());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = &a[i][c] / &a[r][c];
                for k in 0..cols {
                    let x = &a[r][k] * &f;
                    a[i][k] -= x;
                }
            }
        }
        r += 1;
    }
    r
}

#[test]
fn clifford_relations() {
    let n = 3;
    for i in 0..n {
        for j in 0..n {
            let anti = gen(n, i, false)
                .mul(&gen(n, j, true))
                .unwrap()
                .add(&gen(n, j, true).mul(&gen(n, i, false)).unwrap());
            let expected = if i == j {
                CliffordElement::one(n)
            } else {
                CliffordElement::zero(n)
            };
            assert_eq!(anti, expected, "({i},{j})");
            for star in [false, true] {
                let sym = gen(n, i, star)
                    .mul(&gen(n, j, star))
                    .unwrap()
                    .add(&gen(n, j, star).mul(&gen(n, i, star)).unwrap());
                assert!(sym.is_zero());
            }
        }
    }
}

#[test]
fn rank_two_product_matches_operators() {
    // e*_1 e_2 normal-orders to -e_2 e*_1
    let x = word(2, &[(0, true), (1, false)], RewriteOrder::LeftmostFirst);
    let y = word(2, &[(0, false), (1, true)], RewriteOrder::LeftmostFirst);
    let xy = x.mul(&y).unwrap();
    assert_eq!(xy.operator(), x.operator().mul(&y.operator()));
    assert_eq!(xy.charge(), Some(0));
    assert_eq!(xy.parity(), Some(false));
    assert_eq!(x.to_string(), "-1*e2e*1");
}

#[test]
fn rank_mismatch_is_an_error() {
    let err = CliffordElement::one(1)
        .mul(&CliffordElement::one(2))
        .unwrap_err();
    assert_eq!(err, BrstError::RankMismatch { left: 1, right: 2 });
}

#[test]
fn operator_representation_is_faithful() {
    for n in 1..=3usize {
        let monomials: Vec<CliffordElement> = (0..1u32 << n)
            .flat_map(|p| (0..1u32 << n).map(move |q| CliffordElement::monomial(n, (p, q), one())))
            .collect();
        let size = 1usize << n;
        let flat: Vec<SparseVec> = monomials
            .iter()
            .map(|m| {
                let op = m.operator();
                SparseVec::from_pairs((0..size).flat_map(|r| {
                    op.row(r)
                        .iter()
                        .map(move |(c, x)| (r * size + c, x.clone()))
                        .collect::<Vec<_>>()
                }))
            })
            .collect();
        assert_eq!(
            crate::linalg::rank(&Matrix::from_rows(size * size, flat)),
            1 << (2 * n)
        );
        if n <= 2 {
            for x in &monomials {
                for y in &monomials {
                    assert_eq!(
                        x.mul(y).unwrap().operator(),
                        x.operator().mul(&y.operator())
                    );
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn rewriting_is_confluent(rank in 1usize..4, w in proptest::collection::vec((0usize..3, any::<bool>()), 0..8)) {
        let w: Vec<(usize, bool)> = w.into_iter().map(|(i, s)| (i % rank, s)).collect();
        let left = word(rank, &w, RewriteOrder::LeftmostFirst);
        let right = word(rank, &w, RewriteOrder::RightmostFirst);
        prop_assert_eq!(&left, &right);
        let op = w.iter().fold(Matrix::identity(1 << rank), |acc, &(i, s)| acc.mul(&gen(rank, i, s).operator()));
        prop_assert_eq!(left.operator(), op);
    }

    #[test]
    fn opp_product_is_associative(a in 0usize..4, b in 0usize..4, c in 0usize..4, m in proptest::collection::vec((0u32..2, 0u32..2), 3)) {
        let alg = Arc::new(matrix_algebra(2));
        let x = OppCliffordElement::basis(alg.clone(), 1, a, m[0]);
        let y = OppCliffordElement::basis(alg.clone(), 1, b, m[1]);
        let z = OppCliffordElement::basis(alg, 1, c, m[2]);
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
    }
}

#[test]
fn zero_action_has_zero_differential() {
    let act = LieAction::new(
        Arc::new(LieAlgebra::abelian(2)),
        Arc::new(dual_numbers()),
        vec![SparseVec::new(), SparseVec::new()],
    )
    .unwrap();
    let brst = build_brst_complex(&act).unwrap();
    assert!(brst.element.d.is_zero());
    assert_eq!(brst.element.lambda, None);
    assert!(brst.total_differential_matrix().is_zero());
    let groups = cohomology_groups(&brst, &brst.degrees()).unwrap();
    let total: usize = groups.values().map(|g| g.dim()).sum();
    assert_eq!(total, 2 * 16);
}

#[test]
fn bracket_coefficient_is_one_half() {
    for act in [m2_affine_action(), dual_affine_action()] {
        let el = brst_element(&act).unwrap();
        assert_eq!(el.lambda, Some(ratio(1, 2)));
        assert_eq!(el.normalization_ratio(), Some(ratio(-1, 2)));
        assert!(el.matches_ce);
    }
    let el = brst_element(&m2_rank1_action()).unwrap();
    assert_eq!(el.lambda, None);
    assert!(el.bracket_term.is_zero());
}

#[test]
fn m2_rank_one_matches_end_complex() {
    let act = m2_rank1_action();
    let brst = build_brst_complex(&act).unwrap();
    assert_eq!(
        brst.degrees()
            .iter()
            .map(|&n| brst.degree_dim(n).unwrap())
            .collect::<Vec<_>>(),
        vec![4, 8, 4]
    );
    assert_eq!(brst.find_d_squared_failure(), None);
    assert_eq!(brst.find_leibniz_failure(), None);
    let end = ce_end(&act).unwrap();
    let ours = cohomology_groups(&brst, &brst.degrees()).unwrap();
    let theirs = cohomology_groups(&end, &brst.degrees()).unwrap();
    let dims = |g: &BTreeMap<i64, crate::complexes::Homology>| {
        g.values().map(|h| h.dim()).collect::<Vec<_>>()
    };
    assert_eq!(dims(&ours), dims(&theirs));
    let report = brst_isomorphism_check(&act).unwrap();
    assert!(report.passed(), "{report:?}");
}

#[test]
fn total_differential_rank_matches_dense_oracle() {
    let brst = build_brst_complex(&m2_rank1_action()).unwrap();
    let d = brst.total_differential_matrix();
    assert_eq!((d.rows(), d.cols()), (16, 16));
    assert!(d.mul(&d).is_zero());
    let r = dense_rank(&d);
    assert_eq!(crate::linalg::rank(&d), r);
    assert_eq!(crate::linalg::kernel_basis(&d).dim(), 16 - r);
}

#[test]
fn dual_numbers_unit_class() {
    let act = dual_rank1_action();
    let brst = build_brst_complex(&act).unwrap();
    let total: usize = brst
        .degrees()
        .iter()
        .map(|&n| brst.degree_dim(n).unwrap())
        .sum();
    assert_eq!(total, 8);
    let h = brst.cohomology().unwrap();
    let u = brst.unit().unwrap();
    let class = h.class_of(0, &u).expect("unit is a cocycle");
    assert!(!class.is_zero());
    assert_eq!(h.table.unit, Some(class));
    assert!(brst_isomorphism_check(&act).unwrap().passed());
}

#[test]
fn affine_action_is_a_dg_isomorphism() {
    let act = m2_affine_action();
    let report = brst_isomorphism_check(&act).unwrap();
    assert!(report.passed(), "{report:?}");
    assert_eq!(report.brst_dims.values().sum::<usize>(), 64);
    let brst = build_brst_complex(&act).unwrap();
    assert_eq!(brst.find_d_squared_failure(), None);
}

#[test]
fn wrong_bracket_coefficient_breaks_intertwining() {
    let act = dual_affine_action();
    let mut brst = build_brst_complex(&act).unwrap();
    let el = &mut brst.element;
    el.d = el
        .linear
        .add(&el.bracket_term.scale(&el.literal_coefficient));
    let end = ce_end(&act).unwrap();
    assert_ne!(
        end.coords(&realize(&brst.element.d, 1, &end)).unwrap(),
        end.coords(&end.differential_cochain()).unwrap()
    );
}
