use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use simploc::contractibility::homology;
use simploc::largeness::enumerate_induced_cycles;
use simploc::location::is_m_located;
use simploc::metric::check_downward_link_propositions;
use simploc::Generator;

fn pools() -> Vec<(&'static str, rayon::ThreadPool)> {
    vec![
        ("sequential", rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap()),
        ("parallel", rayon::ThreadPoolBuilder::new().build().unwrap()),
    ]
}

pub fn parallel_benchmark(c: &mut Criterion) {
    let cell = Generator::Cell600.build().unwrap();
    let patch = Generator::HexPatch(3).build().unwrap();
    let mut group = c.benchmark_group("cell600");
    group.sample_size(10);
    for (name, pool) in pools() {
        group.bench_with_input(BenchmarkId::new("induced 5-cycles", name), &pool, |b, p| {
            b.iter(|| p.install(|| enumerate_induced_cycles(&cell, 5, 5).unwrap()))
        });
        group.bench_with_input(BenchmarkId::new("homology", name), &pool, |b, p| {
            b.iter(|| p.install(|| homology(&cell)))
        });
        group.bench_with_input(BenchmarkId::new("downward links r=1", name), &pool, |b, p| {
            b.iter(|| p.install(|| check_downward_link_propositions(&cell, 0, 1).unwrap()))
        });
    }
    group.finish();
    let mut group = c.benchmark_group("hex-patch:3");
    for (name, pool) in pools() {
        group.bench_with_input(BenchmarkId::new("7-located", name), &pool, |b, p| {
            b.iter(|| p.install(|| is_m_located(&patch, 7).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, parallel_benchmark);
criterion_main!(benches);
