use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use macmahon_core::identity::{verify, IdentityId, Params};
use macmahon_core::macmahon::{Family, SeriesSpec, Truncation};
use macmahon_core::qfunc::{pochhammer_infinite, q_binomial, Sign};

fn series_ops(c: &mut Criterion) {
    let euler = pochhammer_infinite(Sign::Plus, 1, 1, 200);
    c.bench_function("invert (q;q)_inf order 200", |b| {
        b.iter(|| black_box(&euler).invert().unwrap())
    });
    c.bench_function("cube (q;q)_inf order 200", |b| {
        b.iter(|| black_box(&euler).pow(3))
    });
}

fn builders(c: &mut Criterion) {
    c.bench_function("q_binomial [40,20]", |b| {
        b.iter(|| q_binomial(black_box(40), black_box(20)))
    });
    for k in [1u32, 4] {
        let spec = SeriesSpec::new(Family::A, Sign::Plus, k, Truncation::Infinite, 100);
        c.bench_function(&format!("A_{k}^+ order 100"), |b| {
            b.iter(|| black_box(&spec).build())
        });
    }
}

fn identities(c: &mut Criterion) {
    let params = Params {
        k: Some(2),
        m: Some(8),
        sign: Some(Sign::Plus),
        order: Some(50),
        ..Params::default()
    };
    c.bench_function("verify m-1 k=2 m=8 order 50", |b| {
        b.iter(|| verify(IdentityId::M1, black_box(&params)).unwrap())
    });
    let params = Params {
        k: Some(2),
        sign: Some(Sign::Minus),
        order: Some(50),
        ..Params::default()
    };
    c.bench_function("verify m-3 k=2 order 50", |b| {
        b.iter(|| verify(IdentityId::M3, black_box(&params)).unwrap())
    });
}

criterion_group!(benches, series_ops, builders, identities);
criterion_main!(benches);
