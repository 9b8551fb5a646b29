use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use locfrac_core::fixtures;
use locfrac_core::fractions::{check_l1, check_l2, localize, Scope};
use locfrac_core::oracle::oracle_compare;
use locfrac_core::random::fraction_corpus;

fn axioms(c: &mut Criterion) {
    let mut group = c.benchmark_group("axioms");
    for (name, file) in fixtures::all() {
        group.bench_function(name, |b| {
            b.iter(|| {
                let c = &file.category;
                (
                    check_l1(c, &file.w, Scope::All).holds(),
                    check_l2(c, &file.w, Scope::All).holds(),
                )
            })
        });
    }
    group.finish();
}

fn localization(c: &mut Criterion) {
    let mut group = c.benchmark_group("localize");
    for (name, file) in [
        ("INTERVAL", fixtures::interval()),
        ("RING_Z6", fixtures::ring_z6()),
        ("RING_Z8", fixtures::ring_z8()),
        ("MATRIX_Z2", fixtures::matrix_z2()),
    ] {
        group.bench_function(name, |b| {
            b.iter(|| localize(black_box(&file.category), &file.w).unwrap())
        });
    }
    let corpus = fraction_corpus(7, 100);
    group.bench_function("corpus_100", |b| {
        b.iter(|| {
            corpus
                .iter()
                .map(|s| localize(&s.category, &s.w).unwrap().base.num_morphisms())
                .sum::<usize>()
        })
    });
    group.finish();
}

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle");
    group.sample_size(10);
    for (name, file) in [("INTERVAL", fixtures::interval()), ("RING_Z6", fixtures::ring_z6())] {
        group.bench_function(name, |b| {
            b.iter(|| oracle_compare(&file.category, &file.w, None).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, axioms, localization, oracle);
criterion_main!(benches);
