use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use fideal_bench::{cubic_six, mixed, path};
use fideal_core::{
    enumerate_v, f_vector, facet_complex, is_f_ideal, newton_dual, nonface_complex, CensusConfig, Method,
};

fn f_ideal_test(c: &mut Criterion) {
    let mut group = c.benchmark_group("is_f_ideal");
    let inputs = [("mixed5", mixed()), ("cubic6", cubic_six()), ("path12", path(12)), ("path18", path(18))];
    for (name, ideal) in &inputs {
        for method in [Method::FVector, Method::Partition] {
            group.bench_with_input(BenchmarkId::new(format!("{method:?}"), name), ideal, |b, i| {
                b.iter(|| is_f_ideal(black_box(i), method).unwrap())
            });
        }
    }
    group.finish();
}

fn complexes(c: &mut Criterion) {
    let ideal = path(16);
    c.bench_function("facet_fvector/path16", |b| b.iter(|| f_vector(&facet_complex(black_box(&ideal)).unwrap())));
    c.bench_function("nonface_fvector/path16", |b| b.iter(|| f_vector(&nonface_complex(black_box(&ideal)))));
    c.bench_function("newton_dual/path16", |b| b.iter(|| newton_dual(black_box(&ideal)).unwrap()));
}

fn census(c: &mut Criterion) {
    let mut group = c.benchmark_group("census");
    group.sample_size(10);
    for workers in [1, 0] {
        let cfg = CensusConfig { workers, ..CensusConfig::default() };
        group.bench_with_input(BenchmarkId::new("V(5,2)", workers), &cfg, |b, cfg| {
            b.iter(|| enumerate_v(5, 2, cfg).unwrap().count)
        });
    }
    group.finish();
}

criterion_group!(benches, f_ideal_test, complexes, census);
criterion_main!(benches);
