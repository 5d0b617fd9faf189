use criterion::{criterion_group, criterion_main, Criterion};
use ellipstab::adjquot::char_poly;
use ellipstab::{
    canonical_sweep, evaluate_str, h0, is_unstable_deg0, table1_bundle, verify_table1, CurveKind,
    GroupId, RationalMatrix,
};
use std::hint::black_box;

fn table_sweep(c: &mut Criterion) {
    let sweep = canonical_sweep();
    c.bench_function("table sweep, both curves", |b| {
        b.iter(|| {
            for curve in CurveKind::BOTH {
                black_box(verify_table1(curve, &sweep).unwrap());
            }
        })
    });
}

fn e8_row(c: &mut Criterion) {
    let e8: GroupId = "E8".parse().unwrap();
    let v = table1_bundle(e8, None, 1, CurveKind::Cuspidal).unwrap();
    c.bench_function("h0 of E8 k=1 row, cuspidal", |b| {
        b.iter(|| h0(black_box(&v)))
    });
}

fn generic_twist(c: &mut Criterion) {
    let v = evaluate_str("sym(W2*Wd2,2)", CurveKind::Nodal).unwrap();
    c.bench_function("generic twist test, rank 10", |b| {
        b.iter(|| is_unstable_deg0(black_box(&v), 1).unwrap())
    });
}

fn characteristic_polynomial(c: &mut Criterion) {
    let m = RationalMatrix::from_fn(6, 6, |i, j| {
        ellipstab::linalg::qr((i * 7 + j * 3) as i64 % 11 - 5, 1 + (i + j) as i64 % 3)
    });
    c.bench_function("char poly 6x6", |b| b.iter(|| char_poly(black_box(&m))));
}

criterion_group!(
    benches,
    table_sweep,
    e8_row,
    generic_twist,
    characteristic_polynomial
);
criterion_main!(benches);
