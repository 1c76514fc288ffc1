use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hamred_bench::medial_prism;
use hamred_core::gadgets::{builtin_contract, builtin_gadget, verify_gadget, GadgetName};
use hamred_core::reductions::{hamiltonize_4reg_planar, run_pipeline, Target};
use hamred_core::solvers::{three_color, two_factor};
use hamred_core::{Budget, Instance};

fn hamiltonize(c: &mut Criterion) {
    let mut group = c.benchmark_group("hamiltonize");
    for k in [4, 8, 16] {
        let pg = medial_prism(k);
        group.bench_with_input(BenchmarkId::from_parameter(3 * k), &pg, |b, pg| {
            b.iter(|| hamiltonize_4reg_planar(black_box(pg)).unwrap())
        });
    }
    group.finish();
}

fn five_regular(c: &mut Criterion) {
    let inst = Instance::from_plane(medial_prism(3));
    let budget = Budget::default();
    c.bench_function("5reg_from_medial_prism3", |b| {
        b.iter(|| run_pipeline(black_box(&inst), Target::FiveRegPlanarHam, &budget).unwrap())
    });
}

fn solvers(c: &mut Criterion) {
    let g = medial_prism(12).graph().clone();
    c.bench_function("three_color_36", |b| b.iter(|| three_color(black_box(&g))));
    c.bench_function("two_factor_36", |b| b.iter(|| two_factor(black_box(&g)).unwrap()));
}

fn gadgets(c: &mut Criterion) {
    let budget = Budget::default();
    let mut group = c.benchmark_group("verify_gadget");
    group.sample_size(10);
    for name in GadgetName::ALL {
        let g = builtin_gadget(name);
        let contract = builtin_contract(name);
        group.bench_function(name.as_str(), |b| {
            b.iter(|| verify_gadget(black_box(&g), &contract, &budget))
        });
    }
    group.finish();
}

criterion_group!(benches, hamiltonize, five_regular, solvers, gadgets);
criterion_main!(benches);
