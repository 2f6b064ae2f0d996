use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use grundy_bench::{workload, WORKLOADS};
use grundy_core::{grundy_number, min_permutable_blocks, zero_forcing_number, Variant};

fn grundy(c: &mut Criterion) {
    let mut group = c.benchmark_group("grundy");
    group.sample_size(10);
    for &name in WORKLOADS {
        let g = workload(name);
        for variant in Variant::ALL {
            group.bench_with_input(BenchmarkId::new(variant.to_string(), name), &g, |b, g| {
                b.iter(|| grundy_number(g, variant).unwrap().0)
            });
        }
    }
    group.finish();
}

fn forcing(c: &mut Criterion) {
    let mut group = c.benchmark_group("forcing");
    group.sample_size(10);
    for &name in WORKLOADS {
        let g = workload(name);
        group.bench_with_input(BenchmarkId::new("zf", name), &g, |b, g| {
            b.iter(|| zero_forcing_number(g).unwrap().0)
        });
        group.bench_with_input(BenchmarkId::new("blocks", name), &g, |b, g| {
            b.iter(|| min_permutable_blocks(g).unwrap().count)
        });
    }
    group.finish();
}

criterion_group!(benches, grundy, forcing);
criterion_main!(benches);
