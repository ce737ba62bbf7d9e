use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use hyperinv_core::combinatorics::{canonicalize, enumerate_semimagic};
use hyperinv_core::engine::{build_expansion, discriminant, discriminant_oracle};
use hyperinv_core::{make_unit_delta, symmetrize, HyperMatrix, Variance};

fn sample(rank: usize, dim: usize) -> HyperMatrix {
    let len = dim.pow(rank as u32);
    let data = (0..len)
        .map(|k| ((k * 7919) % 101) as f64 / 50.0 - 1.0)
        .collect();
    symmetrize(&HyperMatrix::new(rank, dim, Variance::Covariant, data).unwrap())
}

fn expansions(c: &mut Criterion) {
    c.bench_function("build_expansion rank 4 order 3", |b| {
        b.iter(|| build_expansion(black_box(4), black_box(3)).unwrap())
    });
    c.bench_function("build_expansion rank 6 order 3", |b| {
        b.iter(|| build_expansion(black_box(6), black_box(3)).unwrap())
    });
}

fn canonical_forms(c: &mut Criterion) {
    let squares = enumerate_semimagic(4, 4).unwrap();
    c.bench_function("canonicalize 10147 squares n=4 r=4", |b| {
        b.iter(|| {
            for sq in &squares {
                black_box(canonicalize(sq).unwrap());
            }
        })
    });
}

fn evaluation(c: &mut Criterion) {
    let a = sample(4, 3);
    let delta = make_unit_delta(4, 3).unwrap();
    discriminant(&a, 3).unwrap();
    c.bench_function("discriminant rank 4 d=3 s=3 (expansion)", |b| {
        b.iter(|| discriminant(black_box(&a), 3).unwrap())
    });
    c.bench_function("discriminant_oracle rank 4 d=3 s=3", |b| {
        b.iter(|| discriminant_oracle(black_box(&a), &delta, 3).unwrap())
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = expansions, canonical_forms, evaluation
}
criterion_main!(benches);
