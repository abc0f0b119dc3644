use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use exotic_orbits::exec::Parallelism;
use exotic_orbits::verify;

fn bench_round_trips(c: &mut Criterion) {
    let mut group = c.benchmark_group("round_trip_sweep_n9");
    group.sample_size(20);
    group.bench_function("sequential", |b| {
        b.iter(|| verify::round_trip_sweep(black_box(9), Parallelism::Sequential))
    });
    group.bench_function("parallel", |b| {
        b.iter(|| verify::round_trip_sweep(black_box(9), Parallelism::Parallel))
    });
    group.finish();
}

fn bench_stratum_counts(c: &mut Criterion) {
    let mut group = c.benchmark_group("stratum_sweep_n9");
    group.sample_size(20);
    group.bench_function("sequential", |b| {
        b.iter(|| verify::stratum_sweep(black_box(9), Parallelism::Sequential))
    });
    group.bench_function("parallel", |b| {
        b.iter(|| verify::stratum_sweep(black_box(9), Parallelism::Parallel))
    });
    group.finish();
}

fn bench_confluence(c: &mut Criterion) {
    let mut group = c.benchmark_group("confluence_sweep_n6");
    group.sample_size(10);
    group.bench_function("sequential", |b| {
        b.iter(|| verify::confluence_sweep(black_box(6), Parallelism::Sequential))
    });
    group.bench_function("parallel", |b| {
        b.iter(|| verify::confluence_sweep(black_box(6), Parallelism::Parallel))
    });
    group.finish();
}

fn bench_oracle_claims(c: &mut Criterion) {
    let mut group = c.benchmark_group("claim_sweep_n4");
    group.sample_size(10);
    group.bench_function("sequential", |b| {
        b.iter(|| verify::claim_sweep(black_box(4), Parallelism::Sequential))
    });
    group.bench_function("parallel", |b| {
        b.iter(|| verify::claim_sweep(black_box(4), Parallelism::Parallel))
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_round_trips,
    bench_stratum_counts,
    bench_confluence,
    bench_oracle_claims
);
criterion_main!(benches);
