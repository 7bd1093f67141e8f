use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use cocg_core::closed_form::MatrixKind;
use cocg_core::graph::{dl_matrix, Graph};
use cocg_core::linalg::{char_poly, nullity_at};
use cocg_core::numeric::{jacobi_spectrum, DEFAULT_MATCH_TOL, DEFAULT_SWEEP_TOL};
use cocg_core::verify::verify_family;
use cocg_core::{FiniteGroup, GroupSpec};

fn bench_char_poly(c: &mut Criterion) {
    let d = Graph::complete_multipartite(&[5, 10, 6])
        .distance_matrix()
        .unwrap();
    c.bench_function("char_poly distance K_{5,10,6}", |b| {
        b.iter(|| char_poly(black_box(&d)).unwrap())
    });

    let d73 = Graph::complete_multipartite(&[9, 36, 28])
        .distance_matrix()
        .unwrap();
    c.bench_function("char_poly distance K_{9,36,28}", |b| {
        b.iter(|| char_poly(black_box(&d73)).unwrap())
    });
}

fn bench_nullity(c: &mut Criterion) {
    let dl = dl_matrix(
        &Graph::complete_multipartite(&[17, 136, 120])
            .distance_matrix()
            .unwrap(),
    );
    c.bench_function("nullity_at DL K_{17,136,120} at 409", |b| {
        b.iter(|| nullity_at(black_box(&dl), 409))
    });
}

fn bench_jacobi(c: &mut Criterion) {
    let dl = dl_matrix(
        &Graph::complete_multipartite(&[9, 36, 28])
            .distance_matrix()
            .unwrap(),
    );
    c.bench_function("jacobi DL 73x73", |b| {
        b.iter(|| jacobi_spectrum(black_box(&dl), DEFAULT_SWEEP_TOL).unwrap())
    });
}

fn bench_group_build(c: &mut Criterion) {
    c.bench_function("build PSL(2,8) centralizer family", |b| {
        b.iter(|| {
            let g = FiniteGroup::build(GroupSpec::Psl2 { k: 3 }).unwrap();
            g.proper_centralizer_family().unwrap()
        })
    });
}

fn bench_verify(c: &mut Criterion) {
    c.bench_function("verify_family Q_{80} D", |b| {
        b.iter(|| {
            verify_family(
                black_box(&GroupSpec::Q4n { n: 20 }),
                MatrixKind::D,
                DEFAULT_MATCH_TOL,
            )
            .unwrap()
        })
    });
}

criterion_group!(
    benches,
    bench_char_poly,
    bench_nullity,
    bench_jacobi,
    bench_group_build,
    bench_verify
);
criterion_main!(benches);
