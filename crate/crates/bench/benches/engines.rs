//! Benchmarks for the three compute-heavy paths: word reversing, coloring
//! counts, and bounded enumeration / simplification.

use criterion::{black_box, criterion_group, criterion_main, Criterion};

use dehnq_core::catalog;
use dehnq_core::finite::enumerate::enumerate_quandle;
use dehnq_core::finite::hom::hom_count;
use dehnq_core::finite::quandle::core_quandle;
use dehnq_core::garside::{compute_alpha_beta, emit_right_presentation};
use dehnq_core::reversing::{word_problem_trivial, Budget};
use dehnq_core::simplify::{simplify_presentation, SimplifyOptions};
use dehnq_core::words::PositiveWord;

fn bench_reversing(c: &mut Criterion) {
    let m = catalog::braid_monoid(5);
    let f = m.complement().unwrap();
    let delta = m.delta.clone().unwrap();
    // delta^2 commutes with everything; deciding that is a fair workout.
    let s1 = PositiveWord::single(dehnq_core::Gen(0));
    let lhs = s1.concat(&delta).concat(&delta);
    let rhs = delta.concat(&delta).concat(&s1);
    let w = lhs.to_group_word().concat(&rhs.to_group_word().inverse());
    c.bench_function("word problem: s1 delta^2 = delta^2 s1 in the 5-strand braid monoid", |b| {
        b.iter(|| {
            let mut budget = Budget::new(1_000_000);
            assert!(word_problem_trivial(black_box(&w), f, &mut budget).unwrap());
        })
    });
}

fn bench_hom_count(c: &mut Criterion) {
    let q = catalog::genus2_quandle();
    let target = core_quandle(8);
    c.bench_function("colorings of the genus-2 presentation in the 8-element dihedral quandle", |b| {
        b.iter(|| black_box(hom_count(black_box(&q), black_box(&target))))
    });
}

fn bench_enumeration(c: &mut Criterion) {
    let q = catalog::core_quandle_presentation(8);
    c.bench_function("enumerate the order-8 dihedral presentation", |b| {
        b.iter(|| black_box(enumerate_quandle(black_box(&q), 600, 5_000_000).unwrap()))
    });
}

fn bench_simplify(c: &mut Criterion) {
    let m = catalog::braid_monoid(4);
    let tables = compute_alpha_beta(&m, 100_000).unwrap();
    let raw = emit_right_presentation(&m, &tables);
    c.bench_function("simplify the raw 4-strand braid emission", |b| {
        b.iter(|| black_box(simplify_presentation(black_box(&raw), &SimplifyOptions::default())))
    });
}

criterion_group!(benches, bench_reversing, bench_hom_count, bench_enumeration, bench_simplify);
criterion_main!(benches);
