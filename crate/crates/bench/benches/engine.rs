use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use lgv_reciprocity::{
    check_schur_reciprocity, enumerate_fans, schur_eval, EvalPoint, HeightBound, Partition,
    SkewShape,
};
use lgv_reciprocity_bench::{dense_matrix, dyck_fixture};

fn matrix_ops(c: &mut Criterion) {
    let mut group = c.benchmark_group("matrix");
    for size in [4, 6, 8] {
        let m = dense_matrix(size);
        group.bench_with_input(BenchmarkId::new("det", size), &m, |b, m| {
            b.iter(|| m.det().unwrap())
        });
        group.bench_with_input(BenchmarkId::new("compound-2", size), &m, |b, m| {
            b.iter(|| m.compound(2).unwrap())
        });
    }
    group.finish();
}

fn dyck_values(c: &mut Criterion) {
    let mut group = c.benchmark_group("dyck");
    for (m, k) in [(2, 1), (2, 2), (3, 2)] {
        let label = format!("{m}-{k}");
        group.bench_function(BenchmarkId::new("f-value-n20", &label), |b| {
            b.iter(|| {
                let (engine, first) = dyck_fixture(m, k);
                engine.f_value(&first, &first, black_box(20)).unwrap()
            })
        });
        group.bench_function(BenchmarkId::new("f-negative-n5", &label), |b| {
            b.iter(|| {
                let (engine, first) = dyck_fixture(m, k);
                engine.f_negative(&first, &first, black_box(5)).unwrap()
            })
        });
        group.bench_function(BenchmarkId::new("recurrence", &label), |b| {
            b.iter(|| {
                let (engine, first) = dyck_fixture(m, k);
                engine.f_recurrence(&first, &first).unwrap()
            })
        });
    }
    group.bench_function("enumerate-fans-2-5-5", |b| {
        b.iter(|| enumerate_fans(2, HeightBound::Bounded(5), black_box(5)).unwrap())
    });
    group.finish();
}

fn schur(c: &mut Criterion) {
    let shape = SkewShape::new(
        Partition::new(vec![3, 2, 1]).unwrap(),
        Partition::new(vec![1]).unwrap(),
    )
    .unwrap();
    let z = EvalPoint::from_i64(&[1, 2, 3]);
    let mut group = c.benchmark_group("schur");
    group.bench_function("eval-n4", |b| {
        b.iter(|| schur_eval(&shape, &z, black_box(4)).unwrap())
    });
    group.bench_function("eval-n-3", |b| {
        b.iter(|| schur_eval(&shape, &z, black_box(-3)).unwrap())
    });
    group.bench_function("reciprocity-nmax3", |b| {
        b.iter(|| check_schur_reciprocity(&shape, &z, black_box(3)).unwrap())
    });
    group.finish();
}

criterion_group!(benches, matrix_ops, dyck_values, schur);
criterion_main!(benches);
