//! Keeps the benchmark entry points honest: the same calls the benches
//! time must succeed and produce sound results.

use yangian::context::Composition;
use yangian::gauss::{gauss_decompose, roundtrip_check};
use yangian::series::Var;
use yangian::{AlgebraContext, Element, Sequence01};

#[test]
fn bench_workloads_compute_valid_results() {
    let ctx = AlgebraContext::new(101, 2, 2, Sequence01::parse("0110").unwrap()).unwrap();
    let x = Element::generator(&ctx, 4, 1, 3);
    let y = Element::generator(&ctx, 1, 4, 3);
    assert!(!x.mul(&ctx, &y).is_zero());

    let ctx = AlgebraContext::new(3, 2, 2, Sequence01::parse("0101").unwrap()).unwrap();
    let mu = Composition::new(vec![1, 1, 1, 1], 4).unwrap();
    let g = gauss_decompose(&ctx, &mu, Var::U, 3).unwrap();
    assert!(roundtrip_check(&g).all_passed());
}
