//! Property tests for the straightening engine, driven through the public API.

use proptest::prelude::*;
use std::sync::Arc;
use yangian::context::{AlgebraContext, Sequence01};
use yangian::pbw::{Element, Gen, Strategy as Straighten, Word};

fn ctx(p: u64, m: usize, n: usize, sigma: &str) -> Arc<AlgebraContext> {
    AlgebraContext::new(p, m, n, Sequence01::parse(sigma).unwrap()).unwrap()
}

/// A generator with bounded indices and level, suitable for random words.
fn arb_gen(size: usize, max_level: usize) -> impl Strategy<Value = Gen> {
    (1..=size, 1..=size, 1..=max_level).prop_map(|(i, j, r)| Gen::new(i, j, r))
}

fn arb_word(size: usize, max_level: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(arb_gen(size, max_level), 1..=4).prop_map(|gens| Word::from_slice(&gens))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    /// Both straightening strategies must produce the identical normal form.
    #[test]
    fn strategies_agree_on_random_words(word in arb_word(3, 3)) {
        let c = ctx(3, 2, 1, "010");
        let a = Element::straighten_word(&c, &word, Straighten::RightmostFirst);
        let b = Element::straighten_word(&c, &word, Straighten::LeftmostFirst);
        prop_assert_eq!(a.to_text(), b.to_text());
    }

    /// Straightening is idempotent: re-multiplying the factors of a normal
    /// form reproduces it.
    #[test]
    fn straightening_is_idempotent(word in arb_word(3, 2)) {
        let c = ctx(5, 1, 2, "011");
        let once = Element::straighten_word(&c, &word, Straighten::RightmostFirst);
        let mut again = Element::zero();
        for (w, coeff) in once.terms() {
            let mut piece = Element::scalar(&c, coeff as i64);
            for g in w.factors() {
                let gen = Element::generator(&c, g.i(), g.j(), g.r());
                piece = piece.mul(&c, &gen);
            }
            again = again.add(&c, &piece);
        }
        prop_assert_eq!(once.to_text(), again.to_text());
    }

    /// The supercommutator of homogeneous elements is super-antisymmetric:
    /// [x, y] + (-1)^{p(x) p(y)} [y, x] = 0.
    #[test]
    fn supercommutator_is_antisymmetric(g in arb_gen(3, 2), h in arb_gen(3, 2)) {
        let c = ctx(3, 2, 1, "001");
        let x = Element::generator(&c, g.i(), g.j(), g.r());
        let y = Element::generator(&c, h.i(), h.j(), h.r());
        let px = x.parity(&c).unwrap();
        let py = y.parity(&c).unwrap();
        let sign = c.field().from_i64(if px & py == 1 { -1 } else { 1 });
        let lhs = x.supercommutator(&c, &y);
        let rhs = y.supercommutator(&c, &x).scale(&c, sign);
        prop_assert!(lhs.add(&c, &rhs).is_zero());
    }

    /// Products of homogeneous generators have the expected parity.
    #[test]
    fn product_parity_is_additive(g in arb_gen(4, 2), h in arb_gen(4, 2)) {
        let c = ctx(3, 2, 2, "0101");
        let x = Element::generator(&c, g.i(), g.j(), g.r());
        let y = Element::generator(&c, h.i(), h.j(), h.r());
        let expect = x.parity(&c).unwrap() ^ y.parity(&c).unwrap();
        let prod = x.mul(&c, &y);
        if !prod.is_zero() {
            prop_assert_eq!(prod.parity(&c), Some(expect));
        }
    }
}

/// In characteristic 2 the square of an odd generator is a legitimate basis
/// word and must not be rewritten away.
#[test]
fn odd_squares_survive_in_characteristic_two() {
    let c = ctx(2, 1, 1, "01");
    for r in 1..=3usize {
        // index pair (1, 2) crosses the parity boundary, so t(1,2,r) is odd
        let x = Element::generator(&c, 1, 2, r);
        assert_eq!(x.parity(&c), Some(1));
        let square = x.mul(&c, &x);
        assert!(
            !square.is_zero(),
            "square of odd generator t(1,2,{r}) collapsed at p = 2"
        );
        let words: Vec<_> = square.terms().map(|(w, _)| w.clone()).collect();
        assert_eq!(words.len(), 1);
        assert_eq!(words[0].factors().len(), 2);
    }
}

/// At p = 2 the binomial identity (x + y)^2 = x^2 + [x, y] + y^2 holds for
/// odd homogeneous x, y; it exercises squares and mixed products together.
#[test]
fn characteristic_two_square_expansion() {
    let c = ctx(2, 1, 1, "10");
    let x = Element::generator(&c, 1, 2, 1);
    let y = Element::generator(&c, 2, 1, 2);
    assert_eq!(x.parity(&c), Some(1));
    assert_eq!(y.parity(&c), Some(1));
    let sum = x.add(&c, &y);
    let lhs = sum.mul(&c, &sum);
    let rhs = x
        .mul(&c, &x)
        .add(&c, &x.supercommutator(&c, &y))
        .add(&c, &y.mul(&c, &y));
    assert_eq!(lhs.to_text(), rhs.to_text());
}

/// Odd squares vanish whenever the characteristic is odd: 2 x^2 = [x, x] = 0.
#[test]
fn odd_squares_vanish_in_odd_characteristic() {
    for p in [3u64, 5] {
        let c = ctx(p, 1, 1, "01");
        let x = Element::generator(&c, 1, 2, 1);
        let bracket = x.supercommutator(&c, &x);
        assert!(bracket.is_zero(), "[x, x] must vanish for odd x at p = {p}");
    }
}
