//! Benchmarks for the closure operators on random row-regular matrices.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use tropsolve_bench::random_matrix;
use tropsolve_core::linalg::{big_tr, conjugate_transpose, mat_mul, scalar_mul, star};
use tropsolve_core::semifield::Semifield;
use tropsolve_core::spectral::spectral_radius;
use tropsolve_core::TropScalar;

fn bench_mat_mul(c: &mut Criterion) {
    let mut group = c.benchmark_group("mat_mul");
    for &n in &[8usize, 16, 32] {
        let a = random_matrix(11 + n as u64, n, 10, 30);
        group.bench_with_input(BenchmarkId::from_parameter(n), &a, |b, a| {
            b.iter(|| mat_mul(a, a).unwrap());
        });
    }
    group.finish();
}

fn bench_big_tr(c: &mut Criterion) {
    let mut group = c.benchmark_group("big_tr");
    for &n in &[8usize, 16, 32] {
        let a = random_matrix(23 + n as u64, n, 10, 30);
        group.bench_with_input(BenchmarkId::from_parameter(n), &a, |b, a| {
            b.iter(|| big_tr(a).unwrap());
        });
    }
    group.finish();
}

fn bench_star(c: &mut Criterion) {
    let mut group = c.benchmark_group("star");
    for &n in &[8usize, 16, 32] {
        let a = random_matrix(37 + n as u64, n, 10, 30);
        // Rescale by the inverse of the radius so the closure converges.
        let rho = spectral_radius(&a).expect("square input").rho;
        let scaled = match rho.inv() {
            Ok(inv) => scalar_mul(&inv, &a),
            Err(_) => a.clone(),
        };
        group.bench_with_input(BenchmarkId::from_parameter(n), &scaled, |b, m| {
            b.iter(|| star(m).unwrap());
        });
    }
    group.finish();
}

fn bench_conjugate(c: &mut Criterion) {
    let a = random_matrix(53, 32, 10, 30);
    c.bench_function("conjugate_transpose/32", |b| {
        b.iter(|| conjugate_transpose(&a).unwrap());
    });
    let _: TropScalar = TropScalar::one();
}

criterion_group!(benches, bench_mat_mul, bench_big_tr, bench_star, bench_conjugate);
criterion_main!(benches);
