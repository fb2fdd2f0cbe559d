//! The tensor square Y ⊗ Y and the coproduct Δ.
//!
//! Δ(t_{i,j}^{(r)}) = Σ_{s=0}^{r} Σ_{k} t_{i,k}^{(r-s)} ⊗ t_{k,j}^{(s)},
//! with t^{(0)} = δ, extended to products multiplicatively under the sign
//! rule (a ⊗ b)(c ⊗ d) = (-1)^{parity(b)parity(c)} ac ⊗ bd.  The sum is
//! finite, so no truncation is involved.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::context::AlgebraContext;
use crate::field::FieldElement;
use crate::pbw::element::{Element, RttRule};
use crate::pbw::straighten::word_parity;
use crate::pbw::{Gen, Word};

/// A sparse element of Y_{M|N}(σ) ⊗ Y_{M|N}(σ), keyed by pairs of
/// PBW-normal words.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TensorElement {
    terms: BTreeMap<(Word, Word), FieldElement>,
}

impl TensorElement {
    pub fn zero() -> TensorElement {
        TensorElement {
            terms: BTreeMap::new(),
        }
    }

    /// The unit 1 ⊗ 1.
    pub fn one(ctx: &AlgebraContext) -> TensorElement {
        pure(ctx, Element::scalar(ctx, 1), Element::scalar(ctx, 1))
    }

    /// a ⊗ b for straightened elements a, b.
    pub fn pure(ctx: &AlgebraContext, a: &Element, b: &Element) -> TensorElement {
        pure(ctx, a.clone(), b.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// self + c · other.
    pub fn add_scaled(&self, ctx: &AlgebraContext, other: &TensorElement, c: FieldElement) -> TensorElement {
        let field = ctx.field();
        let c = field.from_u64(c);
        let mut terms = self.terms.clone();
        for (k, &v) in &other.terms {
            let sum = field.add(terms.get(k).copied().unwrap_or(0), field.mul(v, c));
            if sum == 0 {
                terms.remove(k);
            } else {
                terms.insert(k.clone(), sum);
            }
        }
        TensorElement { terms }
    }

    pub fn add(&self, ctx: &AlgebraContext, other: &TensorElement) -> TensorElement {
        self.add_scaled(ctx, other, 1)
    }

    pub fn sub(&self, ctx: &AlgebraContext, other: &TensorElement) -> TensorElement {
        self.add_scaled(ctx, other, ctx.field().neg(1))
    }

    /// Product under the sign rule.  PBW words are parity-homogeneous, so
    /// the Koszul sign is determined per term pair.
    pub fn mul(&self, ctx: &AlgebraContext, other: &TensorElement) -> TensorElement {
        let field = ctx.field();
        let rule = RttRule { ctx };
        let mut acc = TensorElement::zero();
        for ((a1, b1), &c1) in &self.terms {
            let pb1 = word_parity(&rule, b1);
            for ((a2, b2), &c2) in &other.terms {
                let pa2 = word_parity(&rule, a2);
                let sign = field.sign(pb1 & pa2);
                let coeff = field.mul(field.mul(c1, c2), sign);
                let left = Element::from_terms(ctx, vec![(1, a1.concat(a2))]);
                let right = Element::from_terms(ctx, vec![(1, b1.concat(b2))]);
                acc = acc.add_scaled(ctx, &pure(ctx, left, right), coeff);
            }
        }
        acc
    }

    /// Canonical text: descending key order, `c*(left | right)` with each
    /// side a word or `1`.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        let mut first = true;
        for ((a, b), c) in self.terms.iter().rev() {
            if !first {
                out.push_str(" + ");
            }
            let left = if a.is_empty() { "1".to_string() } else { a.to_string() };
            let right = if b.is_empty() { "1".to_string() } else { b.to_string() };
            let _ = write!(out, "{c}*({left} | {right})");
            first = false;
        }
        out
    }
}

/// Distribute a ⊗ b over the term maps of straightened a and b.
fn pure(ctx: &AlgebraContext, a: Element, b: Element) -> TensorElement {
    let field = ctx.field();
    let mut terms = BTreeMap::new();
    for (wa, ca) in a.terms() {
        for (wb, cb) in b.terms() {
            let c = field.mul(ca, cb);
            if c != 0 {
                terms.insert((wa.clone(), wb.clone()), c);
            }
        }
    }
    TensorElement { terms }
}

/// The coproduct of a straightened element, word by word.
pub fn delta(ctx: &AlgebraContext, e: &Element) -> TensorElement {
    let mut acc = TensorElement::zero();
    for (w, c) in e.terms() {
        let mut prod = TensorElement::one(ctx);
        for g in w.factors() {
            prod = prod.mul(ctx, &delta_generator(ctx, *g));
        }
        acc = acc.add_scaled(ctx, &prod, c);
    }
    acc
}

/// Δ of a single generator.
fn delta_generator(ctx: &AlgebraContext, g: Gen) -> TensorElement {
    let (i, j, r) = (g.i(), g.j(), g.r());
    let mut acc = TensorElement::zero();
    for s in 0..=r {
        for k in 1..=ctx.size() {
            let left = Element::generator(ctx, i, k, r - s);
            let right = Element::generator(ctx, k, j, s);
            if left.is_zero() || right.is_zero() {
                continue;
            }
            acc = acc.add(ctx, &pure(ctx, left, right));
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::Sequence01;
    use std::sync::Arc;

    fn ctx11(p: u64) -> Arc<AlgebraContext> {
        AlgebraContext::new(p, 1, 1, Sequence01::parse("01").unwrap()).unwrap()
    }

    #[test]
    fn delta_of_level_one_is_primitive_like() {
        let ctx = ctx11(5);
        let t = Element::generator(&ctx, 1, 2, 1);
        let one = Element::scalar(&ctx, 1);
        let expect = TensorElement::pure(&ctx, &t, &one).add(&ctx, &TensorElement::pure(&ctx, &one, &t));
        assert_eq!(delta(&ctx, &t), expect);
    }

    #[test]
    fn delta_of_level_two_has_middle_terms() {
        // Δ(t_{1,1}^{(2)}) = t^{(2)}⊗1 + 1⊗t^{(2)} + Σ_k t_{1,k}^{(1)}⊗t_{k,1}^{(1)}.
        let ctx = ctx11(5);
        let t = Element::generator(&ctx, 1, 1, 2);
        let one = Element::scalar(&ctx, 1);
        let mut expect = TensorElement::pure(&ctx, &t, &one).add(&ctx, &TensorElement::pure(&ctx, &one, &t));
        for k in 1..=2 {
            expect = expect.add(
                &ctx,
                &TensorElement::pure(
                    &ctx,
                    &Element::generator(&ctx, 1, k, 1),
                    &Element::generator(&ctx, k, 1, 1),
                ),
            );
        }
        assert_eq!(delta(&ctx, &t), expect);
    }

    #[test]
    fn delta_of_scalar_is_unit() {
        let ctx = ctx11(3);
        assert_eq!(delta(&ctx, &Element::scalar(&ctx, 1)), TensorElement::one(&ctx));
    }

    #[test]
    fn delta_is_an_algebra_homomorphism_on_generator_pairs() {
        for ctx in [ctx11(5), ctx11(2)] {
            let sz = ctx.size();
            for r in 1..=2usize {
                for s in 1..=2usize {
                    for i in 1..=sz {
                        for j in 1..=sz {
                            for k in 1..=sz {
                                for l in 1..=sz {
                                    let a = Element::generator(&ctx, i, j, r);
                                    let b = Element::generator(&ctx, k, l, s);
                                    let lhs = delta(&ctx, &a.mul(&ctx, &b));
                                    let rhs = delta(&ctx, &a).mul(&ctx, &delta(&ctx, &b));
                                    assert_eq!(
                                        lhs,
                                        rhs,
                                        "coproduct not multiplicative at p={} ({i},{j},{r})({k},{l},{s})",
                                        ctx.p()
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn tensor_sign_rule() {
        // (1 ⊗ b)(c ⊗ 1) = (-1)^{p(b)p(c)} c ⊗ b for odd b, c.
        let ctx = ctx11(7);
        let b = Element::generator(&ctx, 1, 2, 1);
        let c = Element::generator(&ctx, 2, 1, 1);
        let one = Element::scalar(&ctx, 1);
        let lhs = TensorElement::pure(&ctx, &one, &b).mul(&ctx, &TensorElement::pure(&ctx, &c, &one));
        let expect = TensorElement::zero().add_scaled(
            &ctx,
            &TensorElement::pure(&ctx, &c, &b),
            ctx.field().neg(1),
        );
        assert_eq!(lhs, expect);
    }
}
