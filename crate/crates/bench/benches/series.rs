use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use chernroots::genera::{ch_exterior, todd_class};
use chernroots::identity::{run_suite, verify_product};

fn kernel(c: &mut Criterion) {
    let mut group = c.benchmark_group("mul");
    for m in [2usize, 3, 4] {
        let a = todd_class(m, 8).unwrap();
        let b = ch_exterior(m, 8).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(m), &m, |bench, _| {
            bench.iter(|| black_box(&a).mul(black_box(&b)).unwrap())
        });
    }
    group.finish();

    let mut group = c.benchmark_group("reciprocal");
    for m in [2usize, 4] {
        let ch = ch_exterior(m, 8).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(m), &m, |bench, _| {
            bench.iter(|| black_box(&ch).reciprocal().unwrap())
        });
    }
    group.finish();

    let todd = todd_class(4, 8).unwrap();
    c.bench_function("to_chern_basis/m4_d8", |b| {
        b.iter(|| black_box(&todd).to_chern_basis())
    });
}

fn verification(c: &mut Criterion) {
    c.bench_function("verify_product/m4_d8", |b| {
        b.iter(|| verify_product(4, 8).unwrap())
    });
    c.bench_function("run_suite/default", |b| {
        b.iter(|| run_suite(&[1, 2, 3, 4], 8).unwrap())
    });
}

criterion_group!(benches, kernel, verification);
criterion_main!(benches);
