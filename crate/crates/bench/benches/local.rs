use chatelet_core::padic::ratio;
use chatelet_core::{global_chow, hilbert_symbol, local_chow, GlobalOptions, LocalOptions, Place};
use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

fn local(c: &mut Criterion) {
    let cases = [
        ("q2_d-2", -2, [0, 1, 17], Place::Prime(2)),
        ("q2_d-1", -1, [0, 3, 27], Place::Prime(2)),
        ("q5_d5", 5, [0, 2, 12], Place::Prime(5)),
        ("q13_d13", 13, [0, 1, 170], Place::Prime(13)),
        ("real_d-1", -1, [0, 1, 2], Place::Real),
    ];
    let mut group = c.benchmark_group("local_chow");
    for (name, d, roots, place) in cases {
        let d = ratio(d, 1);
        let roots = roots.map(|r| ratio(r, 1));
        group.bench_function(name, |b| {
            b.iter(|| local_chow(black_box(&d), black_box(&roots), place, LocalOptions::default()).unwrap())
        });
    }
    group.finish();
}

fn global(c: &mut Criterion) {
    let opts = GlobalOptions::default();
    let mut group = c.benchmark_group("global_chow");
    for (name, d, roots) in [("d-1", -1, [0, 1, 2]), ("d17", 17, [0, 1, 2]), ("d-15", -15, [-3, 2, 12])] {
        let d = ratio(d, 1);
        let roots = roots.map(|r| ratio(r, 1));
        group.bench_function(name, |b| b.iter(|| global_chow(black_box(&d), black_box(&roots), &opts).unwrap()));
    }
    group.finish();
}

fn symbol(c: &mut Criterion) {
    let (a, b) = (ratio(-96, 25), ratio(250, 3));
    c.bench_function("hilbert_symbol_q2", |bch| {
        bch.iter(|| hilbert_symbol(black_box(&a), black_box(&b), Place::Prime(2)).unwrap())
    });
}

criterion_group!(benches, local, global, symbol);
criterion_main!(benches);
