//! Throughput benches for the solver kernels and the batch-style operations,
//! comparing the library's data-parallel paths against plain sequential
//! loops over the same pure solves.
//!
//! The library paths run on rayon under the default `parallel` feature; run
//! `cargo bench --no-default-features` to measure the sequential fallback of
//! the same entry points.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use rayon::prelude::*;

use stefan_mushy::verify::{full_report, GridSpec};
use stefan_mushy::{asymptotics, solver, Material, MushyZone};

const ONES: Material = Material::new(1.0, 1.0, 1.0, 1.0);
const ZONE: MushyZone = MushyZone::new(0.1, 0.5);

fn bench_erf(c: &mut Criterion) {
    let xs: Vec<f64> = (0..4096).map(|i| -6.0 + 12.0 * i as f64 / 4095.0).collect();
    c.bench_function("erf/grid_4096", |b| {
        b.iter(|| xs.iter().map(|&x| stefan_mushy::numerics::erf(black_box(x))).sum::<f64>())
    });
}

fn bench_single_solves(c: &mut Criterion) {
    let mut group = c.benchmark_group("solve_single");
    group.bench_function("p1", |b| {
        b.iter(|| solver::solve_p1(&ONES, &ZONE, black_box(10.0), black_box(1.0)).unwrap())
    });
    group.bench_function("p2", |b| {
        b.iter(|| solver::solve_p2(&ONES, &ZONE, black_box(1.0)).unwrap())
    });
    group.bench_function("p3", |b| {
        b.iter(|| solver::solve_p3(&ONES, &ZONE, black_box(2.0)).unwrap())
    });
    group.finish();
}

fn bench_batch_solves(c: &mut Criterion) {
    // 512 independent convective solves: the inner loop of every sweep
    let h0s: Vec<f64> = (0..512).map(|i| 1.0 + 0.25 * i as f64).collect();
    let mut group = c.benchmark_group("batch_512_solves");
    group.bench_function("sequential", |b| {
        b.iter(|| {
            h0s.iter()
                .map(|&h0| solver::solve_p1(&ONES, &ZONE, h0, 1.0).unwrap().xi())
                .sum::<f64>()
        })
    });
    group.bench_function("parallel", |b| {
        b.iter(|| {
            h0s.par_iter()
                .map(|&h0| solver::solve_p1(&ONES, &ZONE, h0, 1.0).unwrap().xi())
                .sum::<f64>()
        })
    });
    group.finish();
}

fn bench_convergence_study(c: &mut Criterion) {
    let sweep = asymptotics::default_h0_sweep();
    c.bench_function("convergence_study/default_sweep", |b| {
        b.iter(|| asymptotics::convergence_study(&ONES, &ZONE, black_box(1.0), &sweep).unwrap())
    });
}

fn bench_full_report(c: &mut Criterion) {
    let sol = solver::solve_p1(&ONES, &ZONE, 10.0, 1.0).unwrap();
    let grid = GridSpec::default();
    c.bench_function("full_report/default_grid", |b| {
        b.iter(|| full_report(black_box(&sol), &grid).unwrap())
    });
}

criterion_group!(
    benches,
    bench_erf,
    bench_single_solves,
    bench_batch_solves,
    bench_convergence_study,
    bench_full_report
);
criterion_main!(benches);
