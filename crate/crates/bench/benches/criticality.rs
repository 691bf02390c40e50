use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use wonderful_bench::random_systems;
use wonderful_core::{catalog, critical_roots, critical_roots_oracle, distinguished_elements};

fn criticality(c: &mut Criterion) {
    let mut group = c.benchmark_group("criticality");
    for rank in [4, 6] {
        let systems = random_systems(32, rank, 11);
        group.bench_with_input(BenchmarkId::new("coatoms", rank), &systems, |b, s| {
            b.iter(|| {
                s.iter()
                    .map(|x| critical_roots(black_box(x)).roots.len())
                    .sum::<usize>()
            })
        });
        group.bench_with_input(BenchmarkId::new("oracle", rank), &systems, |b, s| {
            b.iter(|| {
                s.iter()
                    .map(|x| critical_roots_oracle(black_box(x)).roots.len())
                    .sum::<usize>()
            })
        });
    }
    group.finish();
}

fn validation(c: &mut Criterion) {
    let entries = catalog::catalog_entries();
    c.bench_function("validate catalog", |b| {
        b.iter(|| {
            entries
                .iter()
                .filter(|e| black_box(&e.system).validate().ok())
                .count()
        })
    });
    c.bench_function("rigidity catalog", |b| {
        b.iter(|| {
            entries
                .iter()
                .filter(|e| distinguished_elements(black_box(&e.system)).rigid())
                .count()
        })
    });
}

criterion_group!(benches, criticality, validation);
criterion_main!(benches);
