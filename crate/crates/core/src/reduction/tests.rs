use std::sync::Arc;

use proptest::prelude::*;

use super::*;
use crate::algebra::catalog::*;
use crate::algebra::{induced_module, FinAlgebra};
use crate::hecke::{hecke_algebra, tor, HeckeOptions, HeckeResult, Resolution};
use crate::linalg::{int, SparseVec};
use crate::resolutions::{bar_resolution, periodic_resolution};

fn e(i: usize) -> SparseVec {
    SparseVec::unit(i)
}

fn trivial_over(alg: FinAlgebra, b: &AugmentedSubalgebra) -> LeftModule {
    LeftModule::trivial(Arc::new(alg), b.eps()).unwrap()
}

fn hecke(b: &AugmentedSubalgebra, window: usize, max_degree: i64) -> HeckeResult {
    let o = HeckeOptions {
        window,
        min_degree: 0,
        max_degree,
        stability_passes: 1,
    };
    hecke_algebra(&Resolution::Bar(b.clone()), &o).unwrap()
}

fn rep(h: &HeckeResult, n: i64) -> SparseVec {
    h.table.representatives[&n][0].clone()
}

#[test]
fn cohomology_of_induced_module() {
    let b = m2_nilpotent_pair();
    let v = induced_module(&b).module;
    let h = module_cohomology(&b, &v, 3).unwrap();
    assert_eq!(h.dims(), vec![1, 0, 0]);
    assert_eq!(h.groups[&0].cycles, invariants(&v, &b));
}

#[test]
fn cohomology_of_trivial_module_matches_koszul() {
    let b = dual_numbers_pair();
    let k = trivial_over(crate::algebra::catalog::dual_numbers(), &b);
    let h = module_cohomology(&b, &k, 4).unwrap();
    assert_eq!(h.dims(), vec![1, 1, 1, 1]);
    let koszul = crate::complexes::hom_complex(&periodic_resolution(&b, &e(1), 4), &k);
    assert_eq!(koszul.cohomology_dims(), h.dims());
}

#[test]
fn trivial_subalgebra_cohomology_is_the_module() {
    let b = m2_trivial_pair();
    let v = LeftModule::regular(b.parent().clone());
    assert_eq!(module_cohomology(&b, &v, 3).unwrap().dims(), vec![4, 0, 0]);
}

#[test]
fn hom_over_a_equals_hom_over_b() {
    for b in [dual_numbers_pair(), m2_nilpotent_pair(), m2_borel_pair()] {
        let v = induced_module(&b).module;
        let over_a = module_cohomology(&b, &v, 3).unwrap().complex;
        let over_b = crate::complexes::hom_complex(&bar_resolution(&b, 3), &v.restrict(&b));
        assert_eq!(over_a.dims(), over_b.dims());
        for n in 0..over_a.dims().len() - 1 {
            assert_eq!(over_a.differential(n), over_b.differential(n));
        }
    }
}

#[test]
fn homology_examples() {
    let b = dual_numbers_pair();
    let regular = LeftModule::right_regular(b.parent());
    assert_eq!(
        module_homology(&b, &regular, 4).unwrap().dims(),
        vec![1, 0, 0, 0]
    );
    let k = trivial_over(b.parent().opposite(), &b);
    assert_eq!(module_homology(&b, &k, 4).unwrap().dims(), vec![1, 1, 1, 1]);
    let m2 = m2_nilpotent_pair();
    let w = LeftModule::right_regular(m2.parent());
    let dims = module_homology(&m2, &w, 4).unwrap().dims();
    assert_eq!(dims, vec![2, 0, 0, 0]);
    assert_eq!(dims, tor(&m2, 4).dims);
}

#[test]
fn identity_acts_trivially() {
    let b = dual_numbers_pair();
    let h = hecke(&b, 4, 2);
    let id = h.end.coords(&h.end.identity()).unwrap();
    let k = trivial_over(b.parent().as_ref().clone(), &b);
    let mc = ModuleCohomology::new(h.end.source().clone(), k).unwrap();
    for n in 0..3 {
        let phi = mc.groups[&n].quotient.representatives()[0].clone();
        let out = act_on_cohomology(&mc, n, &phi, &h.end, 0, &id).unwrap();
        assert_eq!(out.class, mc.class_of(n, &phi).unwrap());
        assert!(out.representative_independent);
    }
    let w = trivial_over(b.parent().opposite(), &b);
    let mh = ModuleHomology::new(h.end.source().clone(), w).unwrap();
    for m in 0..3 {
        let c = mh.groups[&m].quotient.representatives()[0].clone();
        let out = act_on_homology(&mh, &h.end, 0, &id, m, &c).unwrap();
        assert_eq!(out.class, mh.class_of(m, &c).unwrap());
        assert!(out.representative_independent);
    }
}

#[test]
fn m2_hk0_acts_by_scalars() {
    let b = m2_nilpotent_pair();
    let h = hecke(&b, 3, 1);
    let v = induced_module(&b).module;
    let mc = ModuleCohomology::new(h.end.source().clone(), v).unwrap();
    let phi = mc.groups[&0].quotient.representatives()[0].clone();
    let out = act_on_cohomology(&mc, 0, &phi, &h.end, 0, &rep(&h, 0)).unwrap();
    assert_eq!(out.class.nnz(), 1);
    assert!(out.representative_independent);
}

#[test]
fn degree_one_generator_raises_cohomological_degree() {
    let b = dual_numbers_pair();
    let h = hecke(&b, 4, 2);
    let k = trivial_over(b.parent().as_ref().clone(), &b);
    let mc = ModuleCohomology::new(h.end.source().clone(), k).unwrap();
    let phi = mc.groups[&0].quotient.representatives()[0].clone();
    let out = act_on_cohomology(&mc, 0, &phi, &h.end, 1, &rep(&h, 1)).unwrap();
    assert_eq!(out.degree, 1);
    assert!(!out.class.is_zero());
    assert!(out.representative_independent);
}

#[test]
fn degree_one_generator_lowers_homological_degree() {
    let b = dual_numbers_pair();
    let h = hecke(&b, 4, 2);
    let w = trivial_over(b.parent().opposite(), &b);
    let mh = ModuleHomology::new(h.end.source().clone(), w).unwrap();
    for m in 1..3 {
        let c = mh.groups[&m].quotient.representatives()[0].clone();
        let out = act_on_homology(&mh, &h.end, 1, &rep(&h, 1), m, &c).unwrap();
        assert_eq!(out.degree, m as i64 - 1);
        assert!(!out.class.is_zero());
        assert!(out.representative_independent);
    }
    let c0 = mh.groups[&0].quotient.representatives()[0].clone();
    let out = act_on_homology(&mh, &h.end, 1, &rep(&h, 1), 0, &c0).unwrap();
    assert_eq!(out.degree, -1);
    assert!(out.class.is_zero());
}

#[test]
fn non_cocycles_are_rejected() {
    let b = dual_numbers_pair();
    let h = hecke(&b, 4, 1);
    let k = trivial_over(b.parent().as_ref().clone(), &b);
    let mc = ModuleCohomology::new(h.end.source().clone(), k).unwrap();
    let phi = mc.groups[&0].quotient.representatives()[0].clone();
    let layout = h.end.layout(1).unwrap();
    let noise = SparseVec::from_pairs((0..layout.dim).map(|i| (i, int(1))));
    assert!(matches!(
        act_on_cohomology(&mc, 0, &phi, &h.end, 1, &noise),
        Err(ReductionError::NotClosed { degree: 1 })
    ));
}

#[test]
fn observables_examples() {
    let triv = m2_trivial_pair();
    let v = LeftModule::regular(triv.parent().clone());
    assert_eq!(dirac_observables(&triv, &v).subspace.dim(), 4);

    // [E12, a]·E11 = a21 E11, so the condition is a21 = 0: upper triangular matrices
    let b = m2_nilpotent_pair();
    let v = induced_module(&b).module;
    let obs = dirac_observables(&b, &v);
    assert_eq!(obs.subspace, Subspace::span(4, &[e(0), e(1), e(3)]));
    assert!(obs.closed);
    assert_eq!(obs.invariants.dim(), 1);
    assert!(obs.operators.iter().all(|m| m.rows() == 1 && m.cols() == 1));

    let zero = LeftModule::zero(b.parent().clone());
    assert_eq!(dirac_observables(&b, &zero).subspace.dim(), 4);
}

#[test]
fn universal_reduction_examples() {
    let b = m2_nilpotent_pair();
    let h = hecke(&b, 3, 0);
    let r = universal_reduction_check(
        &b,
        &induced_module(&b).module,
        &h.end,
        &h.table.representatives[&0],
    )
    .unwrap();
    assert!(r.passed(), "{r:?}");
    assert_eq!((r.hecke_rank, r.observable_rank), (1, 1));

    let triv = m2_trivial_pair();
    let h = hecke(&triv, 2, 0);
    let v = LeftModule::regular(triv.parent().clone());
    let r = universal_reduction_check(&triv, &v, &h.end, &h.table.representatives[&0]).unwrap();
    assert!(r.passed(), "{r:?}");
    assert_eq!(r.hecke_rank, r.observable_rank);

    let d = dual_numbers_pair();
    let h = hecke(&d, 3, 0);
    let v = LeftModule::regular(d.parent().clone());
    let r = universal_reduction_check(&d, &v, &h.end, &h.table.representatives[&0]).unwrap();
    assert!(r.passed(), "{r:?}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]
    #[test]
    fn action_is_associative(c1 in 1i64..4, c2 in 1i64..4, g in proptest::collection::vec(-2i64..3, 12)) {
        let b = dual_numbers_pair();
        let h = hecke(&b, 4, 2);
        let end = &h.end;
        let noise = |m: i64, k: usize| {
            let layout = end.layout(m - 1).unwrap();
            let v = SparseVec::from_pairs((0..layout.dim).map(|i| (i, int(g[(i + k) % g.len()]))));
            end.differential_matrix(m - 1).unwrap().mul_vec(&v)
        };
        let f = rep(&h, 1).scale(&int(c1)).add(&noise(1, 0));
        let gg = rep(&h, 1).scale(&int(c2)).add(&noise(1, 5));
        let k = trivial_over(b.parent().as_ref().clone(), &b);
        let mc = ModuleCohomology::new(end.source().clone(), k).unwrap();
        let phi = mc.groups[&0].quotient.representatives()[0].clone();
        let step = act_on_cohomology(&mc, 0, &phi, end, 1, &f).unwrap();
        let left = act_on_cohomology(&mc, 1, &step.representative, end, 1, &gg).unwrap();
        let fg = end.compose(&end.cochain(1, &f).unwrap(), &end.cochain(1, &gg).unwrap()).unwrap();
        let right = act_on_cohomology(&mc, 0, &phi, end, 2, &end.coords(&fg).unwrap()).unwrap();
        prop_assert_eq!(left.class, right.class);
    }
}
