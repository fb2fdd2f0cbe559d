//! U(gl_{M|N}[x]): the enveloping algebra of the loop superalgebra on basis
//! symbols e_{i,j}x^r, together with the two structure maps out of the
//! Yangian that land here:
//!
//! - [`gr_leading_symbol`] — the associated-graded symbol of loop degree d,
//!   sending t_{i,j}^{(r)} to (-1)^{|i|} e_{i,j}x^{r-1};
//! - [`ev`] — evaluation, sending t_{i,j}^{(1)} to (-1)^{|i|} e_{i,j} and
//!   killing all higher levels (its image has x-degree 0, i.e. U(gl_{M|N})).
//!
//! Words reuse the shared straightening engine; here the `r` field of a
//! generator stores the power of x directly (r ≥ 0), and the bracket is
//! linear: [e_{i,j}x^a, e_{k,l}x^b] = δ_{k,j} e_{i,l}x^{a+b}
//! − (-1)^{(|i|+|j|)(|k|+|l|)} δ_{l,i} e_{k,j}x^{a+b}.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use crate::context::AlgebraContext;
use crate::error::YangianError;
use crate::field::{FieldElement, PrimeField};
use crate::pbw::cache::RawTerms;
use crate::pbw::element::Element;
use crate::pbw::straighten::{straighten_terms, word_parity, StraightenRule, Strategy};
use crate::pbw::{Gen, Word};

/// A decoded current-algebra basis symbol e_{i,j}x^x (public view of one
/// word factor).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CGen {
    /// Row index, 1-based.
    pub i: usize,
    /// Column index, 1-based.
    pub j: usize,
    /// Power of x (≥ 0).
    pub x: usize,
}

impl CGen {
    fn from_gen(g: Gen) -> CGen {
        CGen {
            i: g.i(),
            j: g.j(),
            x: g.r(),
        }
    }
}

/// The linear straightening rule of U(gl_{M|N}[x]).
struct CurrentRule<'a> {
    ctx: &'a AlgebraContext,
}

impl<'a> StraightenRule for CurrentRule<'a> {
    fn field(&self) -> &PrimeField {
        self.ctx.field()
    }

    fn parity(&self, g: Gen) -> u8 {
        self.ctx.generator_parity(g.i(), g.j())
    }

    fn bracket(&self, x: Gen, y: Gen) -> Arc<RawTerms> {
        let field = self.ctx.field();
        let (i, j, a) = (x.i(), x.j(), x.r());
        let (k, l, b) = (y.i(), y.j(), y.r());
        let mut out: RawTerms = BTreeMap::new();
        if k == j {
            out.insert(Word::single(Gen::new(i, l, a + b)), 1);
        }
        if l == i {
            let sign = field.sign(self.parity(x) & self.parity(y));
            let c = field.neg(sign);
            let w = Word::single(Gen::new(k, j, a + b));
            let v = field.add(out.get(&w).copied().unwrap_or(0), c);
            if v == 0 {
                out.remove(&w);
            } else {
                out.insert(w, v);
            }
        }
        Arc::new(out)
    }
}

/// A finite linear combination of PBW-ordered words in the e_{i,j}x^r.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CurrentAlgebraElement {
    terms: BTreeMap<Word, FieldElement>,
}

impl CurrentAlgebraElement {
    pub fn zero() -> CurrentAlgebraElement {
        CurrentAlgebraElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(ctx: &AlgebraContext, c: i64) -> CurrentAlgebraElement {
        let c = ctx.field().from_i64(c);
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(Word::empty(), c);
        }
        CurrentAlgebraElement { terms }
    }

    /// The basis symbol e_{i,j}x^x.
    pub fn generator(ctx: &AlgebraContext, i: usize, j: usize, x: usize) -> CurrentAlgebraElement {
        assert!(
            i >= 1 && i <= ctx.size() && j >= 1 && j <= ctx.size(),
            "generator index ({i},{j}) out of range for size {}",
            ctx.size()
        );
        let mut terms = BTreeMap::new();
        terms.insert(Word::single(Gen::new(i, j, x)), 1);
        CurrentAlgebraElement { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Iterate terms in ascending word order, factors decoded.
    pub fn terms(&self) -> impl Iterator<Item = (Vec<CGen>, FieldElement)> + '_ {
        self.terms
            .iter()
            .map(|(w, &c)| (w.factors().iter().map(|&g| CGen::from_gen(g)).collect(), c))
    }

    pub fn add(&self, ctx: &AlgebraContext, other: &CurrentAlgebraElement) -> CurrentAlgebraElement {
        let field = ctx.field();
        let mut terms = self.terms.clone();
        for (w, &c) in &other.terms {
            let v = field.add(terms.get(w).copied().unwrap_or(0), c);
            if v == 0 {
                terms.remove(w);
            } else {
                terms.insert(w.clone(), v);
            }
        }
        CurrentAlgebraElement { terms }
    }

    pub fn sub(&self, ctx: &AlgebraContext, other: &CurrentAlgebraElement) -> CurrentAlgebraElement {
        self.add(ctx, &other.neg(ctx))
    }

    pub fn neg(&self, ctx: &AlgebraContext) -> CurrentAlgebraElement {
        self.scale(ctx, ctx.field().neg(1))
    }

    pub fn scale(&self, ctx: &AlgebraContext, c: FieldElement) -> CurrentAlgebraElement {
        let field = ctx.field();
        let c = field.from_u64(c);
        if c == 0 {
            return CurrentAlgebraElement::zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(w, &v)| (w.clone(), field.mul(v, c)))
            .collect();
        CurrentAlgebraElement { terms }
    }

    pub fn mul(&self, ctx: &AlgebraContext, other: &CurrentAlgebraElement) -> CurrentAlgebraElement {
        let field = ctx.field();
        let rule = CurrentRule { ctx };
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (wa, &ca) in &self.terms {
            for (wb, &cb) in &other.terms {
                raw.push((field.mul(ca, cb), wa.concat(wb)));
            }
        }
        CurrentAlgebraElement {
            terms: straighten_terms(&rule, raw, Strategy::RightmostFirst),
        }
    }

    /// Supercommutator over parity-homogeneous parts.
    pub fn supercommutator(
        &self,
        ctx: &AlgebraContext,
        other: &CurrentAlgebraElement,
    ) -> CurrentAlgebraElement {
        let field = ctx.field();
        let rule = CurrentRule { ctx };
        let split = |e: &CurrentAlgebraElement| {
            let mut even = BTreeMap::new();
            let mut odd = BTreeMap::new();
            for (w, &c) in &e.terms {
                if word_parity(&rule, w) == 0 {
                    even.insert(w.clone(), c);
                } else {
                    odd.insert(w.clone(), c);
                }
            }
            (
                CurrentAlgebraElement { terms: even },
                CurrentAlgebraElement { terms: odd },
            )
        };
        let (ae, ao) = split(self);
        let (be, bo) = split(other);
        let mut acc = CurrentAlgebraElement::zero();
        for (pa, ax) in [(0u8, &ae), (1u8, &ao)] {
            if ax.is_zero() {
                continue;
            }
            for (pb, bx) in [(0u8, &be), (1u8, &bo)] {
                if bx.is_zero() {
                    continue;
                }
                let sign = field.sign(pa & pb);
                let fwd = ax.mul(ctx, bx);
                let rev = bx.mul(ctx, ax).scale(ctx, sign);
                acc = acc.add(ctx, &fwd).sub(ctx, &rev);
            }
        }
        acc
    }

    /// Canonical text: descending word order, `c*e(i,j,r) e(i,j,r) …`,
    /// scalars bare, zero as `0`.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        let mut first = true;
        for (w, c) in self.terms.iter().rev() {
            if !first {
                out.push_str(" + ");
            }
            let _ = write!(out, "{c}");
            for (idx, g) in w.factors().iter().enumerate() {
                let sep = if idx == 0 { '*' } else { ' ' };
                let _ = write!(out, "{sep}e({},{},{})", g.i(), g.j(), g.r());
            }
            first = false;
        }
        out
    }
}

/// The loop-degree-d associated-graded symbol of a Yangian element.
///
/// Words of loop degree exactly `d` map factor-wise through
/// t_{i,j}^{(r)} ↦ (-1)^{|i|} e_{i,j}x^{r-1}; words of lower degree vanish
/// in the degree-d layer.  A word of degree above `d` is an error: the
/// element does not lie in filtration level d.
pub fn gr_leading_symbol(
    ctx: &AlgebraContext,
    e: &Element,
    d: usize,
) -> Result<CurrentAlgebraElement, YangianError> {
    let field = ctx.field();
    let rule = CurrentRule { ctx };
    let mut raw: Vec<(FieldElement, Word)> = Vec::new();
    for (w, c) in e.terms() {
        let ld = w.loop_degree();
        if ld > d {
            return Err(YangianError::LevelAboveTruncation { level: ld, order: d });
        }
        if ld < d {
            continue;
        }
        let mut sign_exp = 0u8;
        let factors: Vec<Gen> = w
            .factors()
            .iter()
            .map(|g| {
                sign_exp += ctx.parity_of_index(g.i());
                Gen::new(g.i(), g.j(), g.r() - 1)
            })
            .collect();
        raw.push((field.mul(c, field.sign(sign_exp)), Word::from_slice(&factors)));
    }
    Ok(CurrentAlgebraElement {
        terms: straighten_terms(&rule, raw, Strategy::RightmostFirst),
    })
}

/// The evaluation homomorphism to U(gl_{M|N}) ⊂ U(gl_{M|N}[x]):
/// t_{i,j}^{(1)} ↦ (-1)^{|i|} e_{i,j}x^0 and t^{(r)} ↦ 0 for r ≥ 2.
pub fn ev(ctx: &AlgebraContext, e: &Element) -> CurrentAlgebraElement {
    let field = ctx.field();
    let rule = CurrentRule { ctx };
    let mut raw: Vec<(FieldElement, Word)> = Vec::new();
    'word: for (w, c) in e.terms() {
        let mut sign_exp = 0u8;
        let mut factors: Vec<Gen> = Vec::with_capacity(w.len());
        for g in w.factors() {
            if g.r() >= 2 {
                continue 'word;
            }
            sign_exp += ctx.parity_of_index(g.i());
            factors.push(Gen::new(g.i(), g.j(), 0));
        }
        raw.push((field.mul(c, field.sign(sign_exp)), Word::from_slice(&factors)));
    }
    CurrentAlgebraElement {
        terms: straighten_terms(&rule, raw, Strategy::RightmostFirst),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::Sequence01;

    fn ctx11(p: u64) -> Arc<AlgebraContext> {
        AlgebraContext::new(p, 1, 1, Sequence01::parse("01").unwrap()).unwrap()
    }

    fn ctx21(p: u64) -> Arc<AlgebraContext> {
        AlgebraContext::new(p, 2, 1, Sequence01::parse("010").unwrap()).unwrap()
    }

    #[test]
    fn bracket_oracle() {
        // [e_{2,1}, e_{1,2}] = e_{2,2} + e_{1,1} for σ = 01 (both odd).
        let ctx = ctx11(5);
        let e21 = CurrentAlgebraElement::generator(&ctx, 2, 1, 0);
        let e12 = CurrentAlgebraElement::generator(&ctx, 1, 2, 0);
        let got = e21.supercommutator(&ctx, &e12);
        let expect = CurrentAlgebraElement::generator(&ctx, 2, 2, 0)
            .add(&ctx, &CurrentAlgebraElement::generator(&ctx, 1, 1, 0));
        assert_eq!(got, expect);
        assert_eq!(got.to_text(), "1*e(2,2,0) + 1*e(1,1,0)");
    }

    #[test]
    fn bracket_shifts_x_degree() {
        // [e_{1,2}x^2, e_{2,1}x^1] = e_{1,1}x^3 + e_{2,2}x^3 (σ = 01).
        let ctx = ctx11(7);
        let a = CurrentAlgebraElement::generator(&ctx, 1, 2, 2);
        let b = CurrentAlgebraElement::generator(&ctx, 2, 1, 1);
        let got = a.supercommutator(&ctx, &b);
        let expect = CurrentAlgebraElement::generator(&ctx, 1, 1, 3)
            .add(&ctx, &CurrentAlgebraElement::generator(&ctx, 2, 2, 3));
        assert_eq!(got, expect);
    }

    #[test]
    fn gr_of_generator_and_of_bracket() {
        let ctx = ctx11(5);
        let t12 = Element::generator(&ctx, 1, 2, 1);
        let t21 = Element::generator(&ctx, 2, 1, 1);
        // gr_0 t_{1,2}^{(1)} = (+1) e_{1,2}x^0; gr_0 t_{2,1}^{(1)} = −e_{2,1}x^0.
        assert_eq!(
            gr_leading_symbol(&ctx, &t12, 0).unwrap(),
            CurrentAlgebraElement::generator(&ctx, 1, 2, 0)
        );
        assert_eq!(
            gr_leading_symbol(&ctx, &t21, 0).unwrap(),
            CurrentAlgebraElement::generator(&ctx, 2, 1, 0).neg(&ctx)
        );
        // gr is a Lie homomorphism on this pair.
        let lhs = gr_leading_symbol(&ctx, &t12.supercommutator(&ctx, &t21), 0).unwrap();
        let rhs = gr_leading_symbol(&ctx, &t12, 0)
            .unwrap()
            .supercommutator(&ctx, &gr_leading_symbol(&ctx, &t21, 0).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn gr_is_lie_homomorphism_on_generators() {
        // gr_{(r-1)+(s-1)}([t^{(r)}, t^{(s)}]) = [gr t^{(r)}, gr t^{(s)}]
        // for all index pairs and levels r, s ≤ 3.
        for ctx in [ctx11(5), ctx21(3), ctx11(2)] {
            let sz = ctx.size();
            for r in 1..=3usize {
                for s in 1..=3usize {
                    for i in 1..=sz {
                        for j in 1..=sz {
                            for k in 1..=sz {
                                for l in 1..=sz {
                                    let a = Element::generator(&ctx, i, j, r);
                                    let b = Element::generator(&ctx, k, l, s);
                                    let br = a.supercommutator(&ctx, &b);
                                    let lhs = gr_leading_symbol(&ctx, &br, r + s - 2).unwrap();
                                    let rhs = gr_leading_symbol(&ctx, &a, r - 1)
                                        .unwrap()
                                        .supercommutator(
                                            &ctx,
                                            &gr_leading_symbol(&ctx, &b, s - 1).unwrap(),
                                        );
                                    assert_eq!(
                                        lhs,
                                        rhs,
                                        "gr not a homomorphism at p={} ({i},{j},{r}) ({k},{l},{s})",
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
    fn bracket_respects_loop_filtration() {
        // [F_a, F_b] ⊆ F_{a+b}: the bracket of levels r, s has loop degree
        // at most (r-1)+(s-1).
        let ctx = ctx21(5);
        let sz = ctx.size();
        for r in 1..=3usize {
            for s in 1..=3usize {
                for i in 1..=sz {
                    for j in 1..=sz {
                        for k in 1..=sz {
                            for l in 1..=sz {
                                let br = Element::generator(&ctx, i, j, r)
                                    .supercommutator(&ctx, &Element::generator(&ctx, k, l, s));
                                assert!(br.loop_degree() <= r + s - 2);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn gr_rejects_degrees_above_layer() {
        let ctx = ctx11(5);
        let e = Element::generator(&ctx, 1, 1, 3);
        assert!(matches!(
            gr_leading_symbol(&ctx, &e, 1),
            Err(YangianError::LevelAboveTruncation { level: 2, order: 1 })
        ));
    }

    #[test]
    fn ev_kills_high_levels_and_respects_products() {
        let ctx = ctx11(5);
        assert!(ev(&ctx, &Element::generator(&ctx, 1, 2, 2)).is_zero());
        // ev(t_{1,2}^{(1)}) = e_{1,2}, ev(t_{2,1}^{(1)}) = −e_{2,1}.
        assert_eq!(
            ev(&ctx, &Element::generator(&ctx, 1, 2, 1)),
            CurrentAlgebraElement::generator(&ctx, 1, 2, 0)
        );
        assert_eq!(
            ev(&ctx, &Element::generator(&ctx, 2, 1, 1)),
            CurrentAlgebraElement::generator(&ctx, 2, 1, 0).neg(&ctx)
        );
    }

    #[test]
    fn ev_is_an_algebra_homomorphism_on_generator_pairs() {
        for ctx in [ctx11(5), ctx21(3), ctx11(2)] {
            let sz = ctx.size();
            for r in 1..=2usize {
                for s in 1..=2usize {
                    for i in 1..=sz {
                        for j in 1..=sz {
                            for k in 1..=sz {
                                for l in 1..=sz {
                                    let a = Element::generator(&ctx, i, j, r);
                                    let b = Element::generator(&ctx, k, l, s);
                                    let lhs = ev(&ctx, &a.mul(&ctx, &b));
                                    let rhs = ev(&ctx, &a).mul(&ctx, &ev(&ctx, &b));
                                    assert_eq!(
                                        lhs,
                                        rhs,
                                        "ev not multiplicative at p={} ({i},{j},{r})({k},{l},{s})",
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
    fn current_squares_follow_characteristic() {
        let ctx5 = ctx11(5);
        let x = CurrentAlgebraElement::generator(&ctx5, 1, 2, 0);
        assert!(x.mul(&ctx5, &x).is_zero());

        let ctx2 = ctx11(2);
        let x = CurrentAlgebraElement::generator(&ctx2, 1, 2, 0);
        assert_eq!(x.mul(&ctx2, &x).term_count(), 1);
    }
}
