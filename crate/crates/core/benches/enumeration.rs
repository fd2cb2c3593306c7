//! Sequential against parallel enumeration on the same instances.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use kforce_core::generators::{prefix_block, random_connected, sierpinski};
use kforce_core::solvers::{min_k_forcing, min_k_power_dominating};
use kforce_core::transforms::{pd_partition_bound, PartitionSpec};
use kforce_core::SearchConfig;

const WORKERS: [usize; 2] = [1, 4];

fn solvers(c: &mut Criterion) {
    let s33 = sierpinski(3, 3).unwrap();
    let s43 = sierpinski(4, 3).unwrap();
    let dense = random_connected(18, 0.3, 7).unwrap();
    let mut group = c.benchmark_group("solve");
    group.sample_size(10);
    for workers in WORKERS {
        let cfg = SearchConfig::default().with_workers(workers);
        group.bench_with_input(BenchmarkId::new("pd1_s33", workers), &cfg, |b, cfg| {
            b.iter(|| min_k_power_dominating(black_box(&s33), 1, cfg).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("pd2_s43", workers), &cfg, |b, cfg| {
            b.iter(|| min_k_power_dominating(black_box(&s43), 2, cfg).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("z1_random18", workers), &cfg, |b, cfg| {
            b.iter(|| min_k_forcing(black_box(&dense), 1, cfg).unwrap())
        });
    }
    group.finish();
}

fn partition(c: &mut Criterion) {
    let g = sierpinski(3, 4).unwrap();
    let spec = PartitionSpec::new((0..3).map(|i| prefix_block(&g, 3, 4, &[i]).unwrap()).collect());
    let mut group = c.benchmark_group("partition");
    group.sample_size(10);
    for workers in WORKERS {
        let cfg = SearchConfig::default().with_workers(workers);
        group.bench_with_input(BenchmarkId::new("pd1_s34", workers), &cfg, |b, cfg| {
            b.iter(|| pd_partition_bound(black_box(&g), 1, &spec, cfg).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, solvers, partition);
criterion_main!(benches);
