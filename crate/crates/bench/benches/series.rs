use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use kaluza_core::generators::{gauss_2f1, named_series};
use kaluza_core::rational::{int, rat};
use kaluza_core::series::{power_rational, reciprocal};
use kaluza_core::theorems::{kaluza_sign_check, quo_inequality_exact};
use kaluza_core::{HypergeomParams, NamedSeries, SixParams};

fn series_ops(c: &mut Criterion) {
    let f2 = named_series(NamedSeries::F2, 40);
    let f4 = named_series(NamedSeries::F4, 40);
    let cosh = named_series(NamedSeries::Cosh, 40);
    c.bench_function("reciprocal f2 order 40", |b| b.iter(|| reciprocal(black_box(&f2))));
    c.bench_function("reciprocal cosh order 40", |b| b.iter(|| reciprocal(black_box(&cosh))));
    c.bench_function("power f4^(1/2) order 40", |b| b.iter(|| power_rational(black_box(&f4), &rat(1, 2))));
    c.bench_function("kaluza check f2 order 40", |b| b.iter(|| kaluza_sign_check(black_box(&f2))));
}

fn hypergeometric(c: &mut Criterion) {
    let p = HypergeomParams::new(rat(1, 2), rat(3, 2), rat(7, 3)).unwrap();
    c.bench_function("gauss_2f1 order 60", |b| b.iter(|| gauss_2f1(black_box(&p), 60)));
    let six = SixParams::new([int(3), int(3), int(6), int(1), int(1), int(1)]).unwrap();
    c.bench_function("quo inequality", |b| b.iter(|| quo_inequality_exact(black_box(&six))));
}

criterion_group!(benches, series_ops, hypergeometric);
criterion_main!(benches);
