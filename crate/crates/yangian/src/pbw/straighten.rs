//! The straightening engine: rewriting words into PBW normal form.
//!
//! The engine is generic over a [`StraightenRule`], which supplies parities
//! and the normal form of the super bracket of two generators.  The Yangian
//! instance recurses (RTT brackets produce out-of-order quadratic words);
//! the current-algebra instance is flat (brackets are linear).
//!
//! Termination: each rewrite strictly decreases the measure
//! (total loop degree, word length, inversion count) lexicographically —
//! a swap keeps degree and length but removes an inversion, a bracket
//! correction drops degree or length.  A step budget derived from that
//! measure turns any non-termination bug into a loud panic instead of a
//! hang.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::field::{FieldElement, PrimeField};
use crate::pbw::cache::RawTerms;
use crate::pbw::{Gen, Word};

/// Which out-of-order adjacent pair to rewrite first.
///
/// The engine default is `RightmostFirst`; `LeftmostFirst` exists so tests
/// can confirm the normal form does not depend on the choice (the
/// confluence surrogate).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    RightmostFirst,
    LeftmostFirst,
}

/// What a straightening rule must provide.
pub(crate) trait StraightenRule {
    fn field(&self) -> &PrimeField;

    /// Parity of a generator (0 or 1).
    fn parity(&self, g: Gen) -> u8;

    /// PBW normal form of the super bracket [x, y].
    fn bracket(&self, x: Gen, y: Gen) -> Arc<RawTerms>;
}

/// Parity of a word under a rule: sum of factor parities mod 2.
pub(crate) fn word_parity<R: StraightenRule>(rule: &R, w: &Word) -> u8 {
    w.factors().iter().map(|&g| rule.parity(g) as usize).sum::<usize>() as u8 % 2
}

/// Position of the adjacent pair to rewrite, per strategy, or `None` if the
/// word is in normal form.
///
/// A pair (w[k], w[k+1]) violates normal form when w[k] > w[k+1], or when
/// the factors are equal, odd, and p ≠ 2 (odd squares reduce away from the
/// basis unless the characteristic is 2).
fn violation<R: StraightenRule>(rule: &R, w: &Word, strategy: Strategy) -> Option<usize> {
    let fs = w.factors();
    if fs.len() < 2 {
        return None;
    }
    let p2 = rule.field().p() == 2;
    let is_bad = |k: usize| {
        let (x, y) = (fs[k], fs[k + 1]);
        x > y || (x == y && !p2 && rule.parity(x) == 1)
    };
    match strategy {
        Strategy::RightmostFirst => (0..fs.len() - 1).rev().find(|&k| is_bad(k)),
        Strategy::LeftmostFirst => (0..fs.len() - 1).find(|&k| is_bad(k)),
    }
}

/// Step budget for one straightening call, derived from the termination
/// measure of the worst input term.  Generous (the measure shrinks at
/// every step) but finite, so a broken rule cannot loop forever.
fn step_budget(terms: &[(FieldElement, Word)]) -> u64 {
    let mut budget: u64 = 10_000;
    for (_, w) in terms {
        let weight = (w.loop_degree() as u64 + w.len() as u64).min(24);
        budget = budget.saturating_add(1_000u64.saturating_mul(4u64.saturating_pow(weight as u32)));
    }
    budget.min(2_000_000_000)
}

/// Rewrite a linear combination of arbitrary words into PBW normal form.
///
/// The worklist is keyed by word so identical intermediate words merge (and
/// possibly cancel) instead of being rewritten repeatedly.
pub(crate) fn straighten_terms<R: StraightenRule>(
    rule: &R,
    input: Vec<(FieldElement, Word)>,
    strategy: Strategy,
) -> RawTerms {
    let field = *rule.field();
    let budget = step_budget(&input);
    let mut steps: u64 = 0;

    let mut done: RawTerms = BTreeMap::new();
    let mut work: BTreeMap<Word, FieldElement> = BTreeMap::new();

    for (c, w) in input {
        merge(&field, &mut work, w, field.from_u64(c));
    }

    while let Some((w, c)) = work.pop_last() {
        if c == 0 {
            continue;
        }
        let Some(k) = violation(rule, &w, strategy) else {
            merge(&field, &mut done, w, c);
            continue;
        };
        steps += 1;
        assert!(
            steps <= budget,
            "straightening exceeded its step budget of {budget}: non-termination suspected"
        );

        let fs = w.factors();
        let (x, y) = (fs[k], fs[k + 1]);
        if x > y {
            // xy = (-1)^{p(x)p(y)} yx + [x, y]
            let sign = field.sign(rule.parity(x) & rule.parity(y));
            let mut swapped = w.clone();
            swapped.0.swap(k, k + 1);
            merge(&field, &mut work, swapped, field.mul(c, sign));
            let bracket = rule.bracket(x, y);
            for (bw, &bc) in bracket.iter() {
                merge(&field, &mut work, splice(&w, k, bw), field.mul(c, bc));
            }
        } else {
            // x == y, odd, p ≠ 2: x² = (1/2)[x, x].
            let half = field.inv(2);
            let bracket = rule.bracket(x, x);
            for (bw, &bc) in bracket.iter() {
                let coeff = field.mul(c, field.mul(half, bc));
                merge(&field, &mut work, splice(&w, k, bw), coeff);
            }
        }
    }

    done
}

/// Add `c · w` into a term map, dropping entries that cancel to zero.
fn merge(field: &PrimeField, map: &mut BTreeMap<Word, FieldElement>, w: Word, c: FieldElement) {
    use std::collections::btree_map::Entry;
    if c == 0 {
        return;
    }
    match map.entry(w) {
        Entry::Occupied(mut o) => {
            let v = field.add(*o.get(), c);
            if v == 0 {
                o.remove();
            } else {
                *o.get_mut() = v;
            }
        }
        Entry::Vacant(vac) => {
            vac.insert(c);
        }
    }
}

/// Replace positions k, k+1 of `w` by the factors of `mid`.
fn splice(w: &Word, k: usize, mid: &Word) -> Word {
    let fs = w.factors();
    let mut v = smallvec::SmallVec::with_capacity(fs.len() - 2 + mid.len());
    v.extend_from_slice(&fs[..k]);
    v.extend_from_slice(mid.factors());
    v.extend_from_slice(&fs[k + 2..]);
    Word(v)
}
