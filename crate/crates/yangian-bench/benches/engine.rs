//! Benchmarks for the straightening engine, the block decomposition, and
//! the relation-verification sweep.

use criterion::{criterion_group, criterion_main, Criterion};
use yangian::context::Composition;
use yangian::gauss::gauss_decompose;
use yangian::relations::{full_suite, RelationConfig};
use yangian::series::Var;
use yangian::{AlgebraContext, Element, Sequence01};

fn straighten_products(c: &mut Criterion) {
    let ctx = AlgebraContext::new(101, 2, 2, Sequence01::parse("0110").unwrap()).unwrap();
    c.bench_function("straighten reversed quadratic level 3", |b| {
        b.iter(|| {
            let x = Element::generator(&ctx, 4, 1, 3);
            let y = Element::generator(&ctx, 1, 4, 3);
            std::hint::black_box(x.mul(&ctx, &y))
        })
    });
    c.bench_function("straighten reversed quartic level 2", |b| {
        b.iter(|| {
            let mut acc = Element::generator(&ctx, 4, 1, 2);
            for (i, j) in [(3, 2), (2, 3), (1, 4)] {
                let g = Element::generator(&ctx, i, j, 2);
                acc = acc.mul(&ctx, &g);
            }
            std::hint::black_box(acc)
        })
    });
}

fn block_decomposition(c: &mut Criterion) {
    let ctx = AlgebraContext::new(3, 2, 2, Sequence01::parse("0101").unwrap()).unwrap();
    let mu = Composition::new(vec![1, 1, 1, 1], 4).unwrap();
    c.bench_function("gauss decomposition 2|2 finest order 3", |b| {
        b.iter(|| std::hint::black_box(gauss_decompose(&ctx, &mu, Var::U, 3).unwrap()))
    });
}

fn verification_sweep(c: &mut Criterion) {
    let ctx = AlgebraContext::new(3, 1, 1, Sequence01::parse("01").unwrap()).unwrap();
    let mu = Composition::new(vec![1, 1], 2).unwrap();
    let cfg = RelationConfig::new(3, 2);
    c.bench_function("full suite 1|1 two blocks", |b| {
        b.iter(|| std::hint::black_box(full_suite(&ctx, &mu, &cfg).unwrap()))
    });
}

criterion_group!(benches, straighten_products, block_decomposition, verification_sweep);
criterion_main!(benches);
