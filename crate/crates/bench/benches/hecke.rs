use std::hint::black_box;
use std::sync::Arc;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use hecke_core::algebra::catalog::{
    dual_numbers_pair, m2_affine_action, m2_borel_pair, m2_nilpotent_pair,
};
use hecke_core::brst::{brst_isomorphism_check, build_brst_complex};
use hecke_core::complexes::{cohomology_algebra, EndComplex};
use hecke_core::hecke::{hecke_algebra, HeckeOptions, Resolution};
use hecke_core::resolutions::induced_bar_complex;

fn bar_complex(c: &mut Criterion) {
    let b = m2_borel_pair();
    let mut g = c.benchmark_group("induced_bar_complex");
    for len in [3, 4, 5] {
        g.bench_with_input(BenchmarkId::from_parameter(len), &len, |bch, &len| {
            bch.iter(|| induced_bar_complex(black_box(&b), len))
        });
    }
    g.finish();
}

fn end_cohomology(c: &mut Criterion) {
    let mut g = c.benchmark_group("end_cohomology");
    for (name, b) in [
        ("dual_numbers", dual_numbers_pair()),
        ("m2_nilpotent", m2_nilpotent_pair()),
    ] {
        let end = EndComplex::new(Arc::new(induced_bar_complex(&b, 5)), 4).unwrap();
        g.bench_function(name, |bch| {
            bch.iter(|| cohomology_algebra(black_box(&end), &[0, 1, 2]).unwrap())
        });
    }
    g.finish();
}

fn hecke(c: &mut Criterion) {
    let opts = HeckeOptions {
        window: 4,
        min_degree: 0,
        max_degree: 3,
        stability_passes: 2,
    };
    let r = Resolution::Bar(dual_numbers_pair());
    c.bench_function("hecke_algebra/dual_numbers", |bch| {
        bch.iter(|| hecke_algebra(black_box(&r), &opts).unwrap())
    });
}

fn brst(c: &mut Criterion) {
    let act = m2_affine_action();
    c.bench_function("brst/build", |bch| {
        bch.iter(|| build_brst_complex(black_box(&act)).unwrap())
    });
    c.bench_function("brst/isomorphism_check", |bch| {
        bch.iter(|| brst_isomorphism_check(black_box(&act)).unwrap())
    });
}

criterion_group!(benches, bar_complex, end_cohomology, hecke, brst);
criterion_main!(benches);
