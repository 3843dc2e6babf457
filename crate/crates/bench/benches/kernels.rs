use criterion::{black_box, criterion_group, criterion_main, Criterion};

use sf_bench::{catalog, dense_three_form, flat_pair, presentation};
use sf_core::exterior::KForm;
use sf_core::halfflat::{lambda_polynomial, obstruction_certificate, verify_half_flat};
use sf_core::stable::{k_endo, lambda_invariant};

fn bench_exterior(c: &mut Criterion) {
    let rho = dense_three_form();
    c.bench_function("wedge_3x3_dense", |b| {
        b.iter(|| black_box(&rho).wedge(black_box(&rho)).unwrap())
    });
    c.bench_function("k_endo_dense", |b| {
        b.iter(|| k_endo(black_box(&rho)).unwrap())
    });
    c.bench_function("lambda_invariant_dense", |b| {
        b.iter(|| lambda_invariant(black_box(&rho)).unwrap())
    });
}

fn bench_lie(c: &mut Criterion) {
    let g = presentation("A4.8+r2");
    c.bench_function("cohomology_a4_8_r2", |b| {
        b.iter(|| black_box(&g).cohomology_dims().unwrap())
    });
    c.bench_function("closed_basis_3_a4_8_r2", |b| {
        b.iter(|| black_box(&g).closed_basis(3).unwrap())
    });
}

fn bench_halfflat(c: &mut Criterion) {
    let cat = catalog();
    let g = presentation("A4.3+R2");
    let alpha = KForm::basis(6, &[4]);
    c.bench_function("obstruction_certificate_a4_3_rr", |b| {
        b.iter(|| obstruction_certificate(black_box(&g), black_box(&alpha)).unwrap())
    });
    let ab = presentation("R6");
    let (omega, rho) = flat_pair();
    c.bench_function("verify_half_flat_r6", |b| {
        b.iter(|| verify_half_flat(black_box(&ab), black_box(&omega), black_box(&rho)).unwrap())
    });
    let g41 = cat
        .presentation("A4.1+r2", &std::collections::BTreeMap::new())
        .unwrap();
    c.bench_function("lambda_polynomial_a4_1_r2", |b| {
        b.iter(|| lambda_polynomial(black_box(&g41)).unwrap())
    });
}

criterion_group!(benches, bench_exterior, bench_lie, bench_halfflat);
criterion_main!(benches);
