use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use dcosets::glnq::{count_gl_young_double_cosets, count_pn_double_cosets, FieldSpec};
use dcosets::kostka::seq_a321652;
use dcosets::permgroup::{cycle_index, hypercube_group, load_polytope};
use dcosets::symgroup::{count_double_cosets, count_self_inverse, zindex_cyclic};
use dcosets::typeb::{b_count_double_cosets, ParabolicSubset};

fn symmetric(c: &mut Criterion) {
    c.bench_function("cyclic n=12", |b| {
        b.iter(|| {
            let z = zindex_cyclic(black_box(12)).unwrap();
            (count_double_cosets(&z, &z).unwrap(), count_self_inverse(&z))
        })
    });
    c.bench_function("hypercube n=5 cycle index", |b| {
        b.iter(|| cycle_index(&hypercube_group(black_box(5)).unwrap()).unwrap())
    });
    let z = cycle_index(&load_polytope("600-cell").unwrap()).unwrap();
    c.bench_function("600-cell count", |b| {
        b.iter(|| count_double_cosets(black_box(&z), &z).unwrap())
    });
    c.bench_function("A321652 n=10", |b| b.iter(|| seq_a321652(black_box(10))));
}

fn typeb(c: &mut Criterion) {
    let i = ParabolicSubset::new(
        42,
        [
            3, 4, 6, 7, 8, 9, 12, 13, 15, 17, 19, 22, 23, 24, 26, 28, 29, 32, 34, 35, 39, 40, 41,
            42,
        ],
    )
    .unwrap();
    c.bench_function("type B n=42", |b| {
        b.iter(|| b_count_double_cosets(black_box(&i), &i).unwrap())
    });
}

fn gl(c: &mut Criterion) {
    let f2 = FieldSpec::new(2).unwrap();
    c.bench_function("permutation matrices GL_8(F_2)", |b| {
        b.iter(|| count_pn_double_cosets(black_box(8), &f2))
    });
    let l = "3,2,1".parse().unwrap();
    let m = "4,2".parse().unwrap();
    c.bench_function("GL_(3,2,1)\\GL_6(F_7)/GL_(4,2)", |b| {
        b.iter(|| count_gl_young_double_cosets(black_box(&l), &m, 7).unwrap())
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = symmetric, typeb, gl
}
criterion_main!(benches);
