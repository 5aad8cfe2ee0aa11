use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use qtorus_core::jones::Summand;
use qtorus_core::pipeline::{paper_operator, step2_build_dio, DIO_SCALE};
use qtorus_core::{buchberger_extended, habiro_bracket, MonomialOrder};

fn habiro(c: &mut Criterion) {
    let one = Summand::one();
    let x = Summand::x();
    c.bench_function("habiro <1>(20)", |b| b.iter(|| habiro_bracket(&one, black_box(20))));
    c.bench_function("habiro <x>(20)", |b| b.iter(|| habiro_bracket(&x, black_box(20))));
}

fn groebner(c: &mut Criterion) {
    let d = step2_build_dio().scaled(DIO_SCALE);
    let gens = [d.a, d.b];
    for order in [MonomialOrder::lex(), MonomialOrder::grevlex()] {
        c.bench_function(&format!("groebner A2,B2 {order}"), |b| {
            b.iter(|| buchberger_extended(black_box(&gens), &order).unwrap())
        });
    }
}

fn torus(c: &mut Criterion) {
    let p = paper_operator();
    c.bench_function("torus product P*P", |b| b.iter(|| black_box(&p) * black_box(&p)));
    c.bench_function("torus sigma P", |b| b.iter(|| black_box(&p).sigma()));
}

criterion_group!(benches, habiro, groebner, torus);
criterion_main!(benches);
