//! Yangian elements: sparse linear combinations of PBW-ordered words in the
//! RTT generators, with the RTT rewriting rule.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use crate::context::{AlgebraContext, EngineFault};
use crate::field::{FieldElement, PrimeField};
use crate::pbw::cache::RawTerms;
use crate::pbw::straighten::{straighten_terms, word_parity, StraightenRule, Strategy};
use crate::pbw::{Gen, Word};

/// The RTT straightening rule for Y_{M|N}(σ).
///
/// `bracket` returns the normal form of the supercommutator
/// `[t_{i,j}^{(r)}, t_{k,l}^{(s)}]`, i.e. the right-hand side of the RTT
/// relation
/// `(-1)^{|i||j|+|i||k|+|j||k|} Σ_{t=0}^{min(r,s)-1}
///  (t_{k,j}^{(t)} t_{i,l}^{(r+s-1-t)} - t_{k,j}^{(r+s-1-t)} t_{i,l}^{(t)})`,
/// with the scalar convention t^{(0)} = δ absorbed into Kronecker deltas.
pub(crate) struct RttRule<'a> {
    pub(crate) ctx: &'a AlgebraContext,
}

impl<'a> StraightenRule for RttRule<'a> {
    fn field(&self) -> &PrimeField {
        self.ctx.field()
    }

    fn parity(&self, g: Gen) -> u8 {
        self.ctx.generator_parity(g.i(), g.j())
    }

    fn bracket(&self, x: Gen, y: Gen) -> Arc<RawTerms> {
        if let Some(hit) = self.ctx.pair_cache.get((x, y)) {
            return hit;
        }
        let field = self.ctx.field();
        let (i, j, r) = (x.i(), x.j(), x.r());
        let (k, l, s) = (y.i(), y.j(), y.r());
        let pi = self.ctx.parity_of_index(i);
        let pj = self.ctx.parity_of_index(j);
        let pk = self.ctx.parity_of_index(k);
        let mut sign = field.sign(pi * pj + pi * pk + pj * pk);
        if self.ctx.fault() == Some(EngineFault::FlipBracketSign) {
            sign = field.neg(sign);
        }
        let neg_sign = field.neg(sign);

        let mut terms: Vec<(FieldElement, Word)> = Vec::new();
        for t in 0..r.min(s) {
            let hi = r + s - 1 - t;
            if t == 0 {
                if self.ctx.fault() == Some(EngineFault::DropBracketTerm) {
                    continue;
                }
                // t^{(0)} factors are Kronecker deltas.
                if k == j {
                    terms.push((sign, Word::single(Gen::new(i, l, hi))));
                }
                if i == l {
                    terms.push((neg_sign, Word::single(Gen::new(k, j, hi))));
                }
            } else {
                terms.push((
                    sign,
                    Word::from_slice(&[Gen::new(k, j, t), Gen::new(i, l, hi)]),
                ));
                terms.push((
                    neg_sign,
                    Word::from_slice(&[Gen::new(k, j, hi), Gen::new(i, l, t)]),
                ));
            }
        }
        // The second summand of each t ≥ 1 term is out of order; recursion
        // terminates because its corrections have smaller total loop degree.
        let result = Arc::new(straighten_terms(self, terms, Strategy::RightmostFirst));
        self.ctx.pair_cache.insert((x, y), result.clone());
        result
    }
}

/// A finite linear combination of PBW-ordered words with nonzero
/// coefficients in GF(p).
///
/// Equality is term-map equality; no zero coefficients are ever stored.  At
/// p = 2 words may contain repeated adjacent odd generators (the odd-square
/// convention); for p ≠ 2 they never do.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Element {
    terms: BTreeMap<Word, FieldElement>,
}

impl Element {
    pub fn zero() -> Element {
        Element {
            terms: BTreeMap::new(),
        }
    }

    /// The scalar `c` (the empty word).
    pub fn scalar(ctx: &AlgebraContext, c: i64) -> Element {
        let c = ctx.field().from_i64(c);
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(Word::empty(), c);
        }
        Element { terms }
    }

    /// The generator t_{i,j}^{(r)}; r = 0 yields the scalar δ_{ij}.
    pub fn generator(ctx: &AlgebraContext, i: usize, j: usize, r: usize) -> Element {
        assert!(
            i >= 1 && i <= ctx.size() && j >= 1 && j <= ctx.size(),
            "generator index ({i},{j}) out of range for size {}",
            ctx.size()
        );
        if r == 0 {
            return Element::scalar(ctx, i64::from(i == j));
        }
        let mut terms = BTreeMap::new();
        terms.insert(Word::single(Gen::new(i, j, r)), 1);
        Element { terms }
    }

    /// Build from raw (coefficient, word) pairs, straightening as needed.
    pub fn from_terms(ctx: &AlgebraContext, raw: Vec<(FieldElement, Word)>) -> Element {
        let rule = RttRule { ctx };
        Element {
            terms: straighten_terms(&rule, raw, Strategy::RightmostFirst),
        }
    }

    #[cfg(test)]
    pub(crate) fn from_raw(terms: RawTerms) -> Element {
        Element { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Iterate terms in ascending word order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, FieldElement)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    /// The coefficient of the empty word.
    pub fn scalar_part(&self) -> FieldElement {
        self.terms.get(&Word::empty()).copied().unwrap_or(0)
    }

    /// Maximum loop degree over stored words (0 for the zero element).
    pub fn loop_degree(&self) -> usize {
        self.terms
            .keys()
            .map(|w| w.loop_degree())
            .max()
            .unwrap_or(0)
    }

    /// Parity if all words agree, else `None`.  The zero element is
    /// homogeneous of either parity; report it as even.
    pub fn parity(&self, ctx: &AlgebraContext) -> Option<u8> {
        let rule = RttRule { ctx };
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return Some(0);
        };
        let p = word_parity(&rule, first);
        for w in it {
            if word_parity(&rule, w) != p {
                return None;
            }
        }
        Some(p)
    }

    /// Split into (even part, odd part).
    pub fn parity_split(&self, ctx: &AlgebraContext) -> (Element, Element) {
        let rule = RttRule { ctx };
        let mut even = BTreeMap::new();
        let mut odd = BTreeMap::new();
        for (w, &c) in &self.terms {
            if word_parity(&rule, w) == 0 {
                even.insert(w.clone(), c);
            } else {
                odd.insert(w.clone(), c);
            }
        }
        (Element { terms: even }, Element { terms: odd })
    }

    pub fn add(&self, ctx: &AlgebraContext, other: &Element) -> Element {
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
        Element { terms }
    }

    pub fn sub(&self, ctx: &AlgebraContext, other: &Element) -> Element {
        self.add(ctx, &other.neg(ctx))
    }

    pub fn neg(&self, ctx: &AlgebraContext) -> Element {
        self.scale(ctx, ctx.field().neg(1))
    }

    pub fn scale(&self, ctx: &AlgebraContext, c: FieldElement) -> Element {
        let field = ctx.field();
        let c = field.from_u64(c);
        if c == 0 {
            return Element::zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(w, &v)| (w.clone(), field.mul(v, c)))
            .collect();
        Element { terms }
    }

    /// Product, straightened to normal form.
    pub fn mul(&self, ctx: &AlgebraContext, other: &Element) -> Element {
        let field = ctx.field();
        let mut raw: Vec<(FieldElement, Word)> = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (wa, &ca) in &self.terms {
            for (wb, &cb) in &other.terms {
                raw.push((field.mul(ca, cb), wa.concat(wb)));
            }
        }
        Element::from_terms(ctx, raw)
    }

    /// Supercommutator `[a, b] = ab − (−1)^{parity(a)parity(b)} ba`,
    /// distributed over parity-homogeneous parts.
    pub fn supercommutator(&self, ctx: &AlgebraContext, other: &Element) -> Element {
        let field = ctx.field();
        let (ae, ao) = self.parity_split(ctx);
        let (be, bo) = other.parity_split(ctx);
        let mut acc = Element::zero();
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

    /// Re-straighten a single word under a chosen strategy (the confluence
    /// surrogate entry point).
    pub fn straighten_word(ctx: &AlgebraContext, w: &Word, strategy: Strategy) -> Element {
        let rule = RttRule { ctx };
        Element {
            terms: straighten_terms(&rule, vec![(1, w.clone())], strategy),
        }
    }

    /// The supercommutator of two generators straight from the RTT
    /// relation right-hand side.
    pub fn rtt_bracket(
        ctx: &AlgebraContext,
        i: usize,
        j: usize,
        r: usize,
        k: usize,
        l: usize,
        s: usize,
    ) -> Element {
        assert!(r >= 1 && s >= 1, "rtt_bracket needs levels r, s >= 1");
        let rule = RttRule { ctx };
        let raw = rule.bracket(Gen::new(i, j, r), Gen::new(k, l, s));
        Element {
            terms: (*raw).clone(),
        }
    }

    /// Canonical text: terms in descending word order, each as
    /// `c*t(i,j,r)*t(i,j,r)*…`, scalars as bare numerals, zero as `0`.
    /// The output is itself a valid expression in the CLI grammar.
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
            if w.is_empty() {
                let _ = write!(out, "{c}");
            } else {
                let _ = write!(out, "{c}*{w}");
            }
            first = false;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::Sequence01;

    fn ctx11(p: u64) -> Arc<AlgebraContext> {
        AlgebraContext::new(p, 1, 1, Sequence01::parse("01").unwrap()).unwrap()
    }

    #[test]
    fn generator_level_zero_is_delta() {
        let ctx = ctx11(3);
        assert_eq!(Element::generator(&ctx, 1, 1, 0), Element::scalar(&ctx, 1));
        assert!(Element::generator(&ctx, 1, 2, 0).is_zero());
        let g = Element::generator(&ctx, 1, 2, 1);
        assert_eq!(g.term_count(), 1);
        assert_eq!(g.to_text(), "1*t(1,2,1)");
    }

    #[test]
    fn bracket_matches_hand_computation() {
        // In Y_{1|1}(σ=01): [t_{1,2}^{(1)}, t_{2,1}^{(1)}] = t_{2,2}^{(1)} − t_{1,1}^{(1)}.
        let ctx = ctx11(5);
        let b = Element::rtt_bracket(&ctx, 1, 2, 1, 2, 1, 1);
        let expect = Element::generator(&ctx, 2, 2, 1).sub(&ctx, &Element::generator(&ctx, 1, 1, 1));
        assert_eq!(b, expect);
    }

    #[test]
    fn bracket_vanishing_cases() {
        let ctx = ctx11(5);
        assert!(Element::rtt_bracket(&ctx, 1, 1, 1, 1, 1, 1).is_zero());
        assert!(Element::rtt_bracket(&ctx, 1, 1, 1, 2, 2, 1).is_zero());
    }

    #[test]
    fn straighten_swaps_odd_pair() {
        // [word t_{2,1}^{(1)} t_{1,2}^{(1)}] straightens to
        // −t_{1,2}^{(1)}t_{2,1}^{(1)} + t_{2,2}^{(1)} − t_{1,1}^{(1)}.
        let ctx = ctx11(5);
        let w = Word::from_slice(&[Gen::new(2, 1, 1), Gen::new(1, 2, 1)]);
        let got = Element::straighten_word(&ctx, &w, Strategy::RightmostFirst);
        let ordered = Word::from_slice(&[Gen::new(1, 2, 1), Gen::new(2, 1, 1)]);
        let expect = Element::from_raw(
            [
                (ordered, 4u64),
                (Word::single(Gen::new(2, 2, 1)), 1),
                (Word::single(Gen::new(1, 1, 1)), 4),
            ]
            .into_iter()
            .collect(),
        );
        assert_eq!(got, expect);
        assert_eq!(got.to_text(), "4*t(1,2,1)*t(2,1,1) + 1*t(2,2,1) + 4*t(1,1,1)");
    }

    #[test]
    fn straighten_mod_two() {
        let ctx = ctx11(2);
        let w = Word::from_slice(&[Gen::new(2, 1, 1), Gen::new(1, 2, 1)]);
        let got = Element::straighten_word(&ctx, &w, Strategy::RightmostFirst);
        let ordered = Word::from_slice(&[Gen::new(1, 2, 1), Gen::new(2, 1, 1)]);
        let expect = Element::from_raw(
            [
                (ordered, 1u64),
                (Word::single(Gen::new(2, 2, 1)), 1),
                (Word::single(Gen::new(1, 1, 1)), 1),
            ]
            .into_iter()
            .collect(),
        );
        assert_eq!(got, expect);
    }

    #[test]
    fn supercommutator_agrees_with_rtt_bracket() {
        let ctx = ctx11(7);
        for (i, j, r, k, l, s) in [
            (1, 2, 1, 2, 1, 1),
            (1, 1, 2, 1, 1, 1),
            (2, 1, 1, 1, 2, 2),
            (2, 2, 2, 1, 2, 1),
        ] {
            let a = Element::generator(&ctx, i, j, r);
            let b = Element::generator(&ctx, k, l, s);
            assert_eq!(
                a.supercommutator(&ctx, &b),
                Element::rtt_bracket(&ctx, i, j, r, k, l, s),
                "bracket mismatch at {:?}",
                (i, j, r, k, l, s)
            );
        }
    }

    #[test]
    fn odd_square_reduces_when_p_odd() {
        let ctx = ctx11(5);
        let x = Element::generator(&ctx, 1, 2, 2);
        let sq = x.mul(&ctx, &x);
        // x odd: x² = (1/2)[x,x]; no squared word may remain.
        for (w, _) in sq.terms() {
            let fs = w.factors();
            for k in 0..fs.len().saturating_sub(1) {
                assert!(fs[k] < fs[k + 1] || ctx.generator_parity(fs[k].i(), fs[k].j()) == 0);
            }
        }
    }

    #[test]
    fn odd_square_retained_when_p_two() {
        let ctx = ctx11(2);
        let x = Element::generator(&ctx, 1, 2, 1);
        let sq = x.mul(&ctx, &x);
        let squared = Word::from_slice(&[Gen::new(1, 2, 1), Gen::new(1, 2, 1)]);
        assert_eq!(sq.terms.get(&squared), Some(&1));
    }

    #[test]
    fn mul_unit_and_zero() {
        let ctx = ctx11(3);
        let x = Element::generator(&ctx, 1, 2, 1).mul(&ctx, &Element::generator(&ctx, 2, 1, 2));
        assert_eq!(Element::scalar(&ctx, 1).mul(&ctx, &x), x);
        assert_eq!(x.mul(&ctx, &Element::scalar(&ctx, 1)), x);
        assert!(x.mul(&ctx, &Element::zero()).is_zero());
    }

    #[test]
    fn antisymmetry_of_supercommutator() {
        let ctx = ctx11(5);
        let gens = [(1, 2, 1), (2, 1, 1), (1, 1, 2), (2, 2, 1)];
        for (i, j, r) in gens {
            for (k, l, s) in gens {
                let a = Element::generator(&ctx, i, j, r);
                let b = Element::generator(&ctx, k, l, s);
                let pa = a.parity(&ctx).unwrap();
                let pb = b.parity(&ctx).unwrap();
                let lhs = a.supercommutator(&ctx, &b);
                let rhs = b
                    .supercommutator(&ctx, &a)
                    .scale(&ctx, ctx.field().sign(pa & pb));
                assert!(lhs.add(&ctx, &rhs).is_zero());
            }
        }
    }
}
