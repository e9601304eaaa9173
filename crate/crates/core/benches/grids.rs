//! Grid sweeps, parallel (rayon) versus the sequential fallback.
//!
//! Run with `cargo bench -p diamond-entropy`; build with
//! `--no-default-features` to see the sequential-only numbers from the
//! `map_collect` entry point itself.

use criterion::{black_box, criterion_group, criterion_main, Criterion};

use diamond_entropy::entropy::{entropy_full, entropy_tilde, Convention};
use diamond_entropy::graph::GraphSpec;
use diamond_entropy::grid::{map_collect, map_collect_seq};
use diamond_entropy::heat::{trace_asymptotic_with, trace_direct};
use diamond_entropy::spectral_zeta::pole_tower;

fn tilde_sweep(c: &mut Criterion) {
    let ls: Vec<u32> = (3..=1500).collect();
    let eval = |l: &u32| entropy_tilde(&GraphSpec::new(*l).unwrap());
    let mut group = c.benchmark_group("tilde_sweep_1498_points");
    group.bench_function("parallel", |b| {
        b.iter(|| black_box(map_collect(black_box(&ls), eval)))
    });
    group.bench_function("sequential", |b| {
        b.iter(|| black_box(map_collect_seq(black_box(&ls), eval)))
    });
    group.finish();
}

fn heat_cross_grid(c: &mut Criterion) {
    let g = GraphSpec::new(5).unwrap();
    let tower = pole_tower(&g, 9).unwrap();
    let ts: Vec<f64> = (0..64)
        .map(|i| 10f64.powf(-5.0 + 3.0 * i as f64 / 63.0))
        .collect();
    let eval = move |t: &f64| {
        let d = trace_direct(&g, *t, 1e-12).unwrap().value;
        let a = trace_asymptotic_with(&g, *t, 8, &tower).unwrap().value;
        (d, a)
    };
    let mut group = c.benchmark_group("heat_trace_64_points");
    group.bench_function("parallel", |b| {
        b.iter(|| black_box(map_collect(black_box(&ts), &eval)))
    });
    group.bench_function("sequential", |b| {
        b.iter(|| black_box(map_collect_seq(black_box(&ts), &eval)))
    });
    group.finish();
}

fn entropy_grid(c: &mut Criterion) {
    let ls: Vec<u32> = (3..=200).collect();
    let eval = |l: &u32| {
        let g = GraphSpec::new(*l).unwrap();
        entropy_full(&g, 0.1, 4, Convention::Paper).unwrap().total
    };
    let mut group = c.benchmark_group("entropy_corrections_198_points");
    group.bench_function("parallel", |b| {
        b.iter(|| black_box(map_collect(black_box(&ls), eval)))
    });
    group.bench_function("sequential", |b| {
        b.iter(|| black_box(map_collect_seq(black_box(&ls), eval)))
    });
    group.finish();
}

criterion_group!(benches, tilde_sweep, heat_cross_grid, entropy_grid);
criterion_main!(benches);
