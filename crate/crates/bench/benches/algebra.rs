use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use welded_core::associator::{check_yang_baxter, extend_to_degree};
use welded_core::quotient::GradedQuotientBasis;
use welded_core::represent::Representation;
use welded_core::series::lie::LyndonBasis;
use welded_core::*;

fn basis_build(c: &mut Criterion) {
    let mut group = c.benchmark_group("basis");
    group.sample_size(10);
    group.bench_function("chord(4) cap 4", |b| {
        b.iter(|| GradedQuotientBasis::build(RelationPreset::InfinitesimalArtin(4), black_box(4)))
    });
    group.bench_function("oriented(3) cap 5", |b| {
        b.iter(|| GradedQuotientBasis::build(RelationPreset::OrientedArtin(3), black_box(5)))
    });
    group.bench_function("oriented(4) cap 3", |b| {
        b.iter(|| GradedQuotientBasis::build(RelationPreset::OrientedArtin(4), black_box(3)))
    });
    group.finish();
}

fn exp_log(c: &mut Criterion) {
    let al = Alphabet::ab();
    let cap = 6;
    let mut x = TruncatedSeries::zero(al.clone(), cap);
    for k in 1..=cap {
        let b = LyndonBasis::new(&al, k, cap).unwrap();
        let coeffs: Vec<Rational> = (0..b.len())
            .map(|i| Rational::new((i as i64 + 1).into(), (k as i64 + 2).into()))
            .collect();
        x = x.add(&b.combine(&coeffs).unwrap()).unwrap();
    }
    let g = x.exp().unwrap();
    c.bench_function("exp ab cap 6", |b| b.iter(|| black_box(&x).exp().unwrap()));
    c.bench_function("log ab cap 6", |b| b.iter(|| black_box(&g).log().unwrap()));
    c.bench_function("inverse ab cap 6", |b| b.iter(|| black_box(&g).inverse().unwrap()));
}

fn evaluation(c: &mut Criterion) {
    let store = BasisStore::new();
    let basis = store.oriented(3, 4).unwrap();
    let rep = Representation::welded(&basis, 4).unwrap();
    let word = WeldedWord::parse("sig1 sig2 sig1^-1 a13 s2 a21^-1 sig2 a32", 3).unwrap();
    c.bench_function("welded eval n 3 cap 4", |b| {
        b.iter(|| rep.eval(black_box(&word)).unwrap())
    });

    let (psi, _) = extend_to_degree(&TruncatedSeries::one(Alphabet::ab(), 1), 4, &store).unwrap();
    let mut group = c.benchmark_group("associator");
    group.sample_size(10);
    group.bench_function("yang-baxter cap 4", |b| {
        b.iter(|| check_yang_baxter(black_box(&psi), 4, &store).unwrap())
    });
    group.bench_function("extend to degree 5", |b| {
        b.iter(|| extend_to_degree(black_box(&psi), 5, &store).unwrap())
    });
    group.finish();
}

criterion_group!(benches, basis_build, exp_log, evaluation);
criterion_main!(benches);
