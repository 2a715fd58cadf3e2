use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use semicomp::completion::{collapse_exhaustive, completion_of_finite};
use semicomp::{enumerate_semirings, BatteryConfig};
use semicomp_bench::ordered_size3;
use std::hint::black_box;

fn enumerate(c: &mut Criterion) {
    c.bench_function("enumerate_semirings(3)", |b| {
        b.iter(|| enumerate_semirings(black_box(3)).unwrap())
    });
}

fn complete(c: &mut Criterion) {
    let tables = ordered_size3();
    let cfg = BatteryConfig {
        families: 100,
        sequences: 50,
        ..BatteryConfig::default()
    };
    c.bench_function("completion_of_finite/size3", |b| {
        b.iter_batched(
            || tables.clone(),
            |ts| {
                for (s, o) in &ts {
                    black_box(completion_of_finite(s, o, "bench", &cfg).unwrap());
                }
            },
            BatchSize::SmallInput,
        )
    });
}

fn collapse(c: &mut Criterion) {
    let (s, o) = ordered_size3().into_iter().next().unwrap();
    let mut g = c.benchmark_group("collapse_exhaustive");
    g.sample_size(10);
    g.bench_function("support2_coeff2_len1", |b| {
        b.iter(|| collapse_exhaustive(&s, &o, 2, 2, 1).unwrap())
    });
    g.finish();
}

criterion_group!(benches, enumerate, complete, collapse);
criterion_main!(benches);
