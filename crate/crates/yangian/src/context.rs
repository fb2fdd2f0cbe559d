//! Ambient algebra parameters: the prime field, the size M|N, the
//! 01-sequence fixing parities, compositions with restricted parities, and
//! the fixed PBW generator order.
//!
//! Everything downstream (straightening, series, Gauss data, maps) hangs off
//! an immutable [`AlgebraContext`], shared by `Arc`.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::YangianError;
use crate::field::PrimeField;
use crate::pbw::cache::PairCache;

/// A word of M zeros and N ones; digit `i` (1-based) is the parity `|i|`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Sequence01 {
    digits: Vec<u8>,
}

/// Which of the three classical transforms of a 01-sequence to apply.
///
/// `Flip` is σˢ (interchange 0 and 1), `Reverse` is σʳ (reverse the word),
/// and `FlipReverse` is σᵈ (both).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SequenceTransform {
    Flip,
    Reverse,
    FlipReverse,
}

impl Sequence01 {
    /// Parse from a string of '0'/'1' characters.
    pub fn parse(s: &str) -> Result<Self, YangianError> {
        let mut digits = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0' => digits.push(0),
                '1' => digits.push(1),
                _ => return Err(YangianError::SequenceDigit),
            }
        }
        Ok(Sequence01 { digits })
    }

    /// Build from raw bits (each must be 0 or 1).
    pub fn from_digits(digits: Vec<u8>) -> Result<Self, YangianError> {
        if digits.iter().any(|&d| d > 1) {
            return Err(YangianError::SequenceDigit);
        }
        Ok(Sequence01 { digits })
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// The parity `|i|` of a 1-based index.
    #[inline]
    pub fn digit(&self, i: usize) -> u8 {
        self.digits[i - 1]
    }

    pub fn zeros(&self) -> usize {
        self.digits.iter().filter(|&&d| d == 0).count()
    }

    pub fn ones(&self) -> usize {
        self.digits.iter().filter(|&&d| d == 1).count()
    }

    /// Apply one of σˢ, σʳ, σᵈ.
    pub fn transform(&self, kind: SequenceTransform) -> Sequence01 {
        let digits = match kind {
            SequenceTransform::Flip => self.digits.iter().map(|d| 1 - d).collect(),
            SequenceTransform::Reverse => self.digits.iter().rev().copied().collect(),
            SequenceTransform::FlipReverse => self.digits.iter().rev().map(|d| 1 - d).collect(),
        };
        Sequence01 { digits }
    }

    /// Concatenation `self · other` (used to build shift-map targets).
    pub fn concat(&self, other: &Sequence01) -> Sequence01 {
        let mut digits = self.digits.clone();
        digits.extend_from_slice(&other.digits);
        Sequence01 { digits }
    }

    /// The suffix of length `len` (used for shift-map sources).
    pub fn suffix(&self, len: usize) -> Sequence01 {
        Sequence01 {
            digits: self.digits[self.digits.len() - len..].to_vec(),
        }
    }
}

impl fmt::Display for Sequence01 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.digits {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// A composition μ = (μ_1, …, μ_n) of M+N into positive parts, carrying the
/// block offsets n_a = μ_1 + … + μ_a.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Composition {
    parts: Vec<usize>,
    /// offsets[a] = μ_1 + … + μ_a, with offsets[0] = 0.
    offsets: Vec<usize>,
}

impl Composition {
    /// Build a composition and check it sums to `total`.
    pub fn new(parts: Vec<usize>, total: usize) -> Result<Self, YangianError> {
        if parts.iter().any(|&p| p == 0) {
            return Err(YangianError::CompositionZeroPart);
        }
        let sum: usize = parts.iter().sum();
        if sum != total {
            return Err(YangianError::CompositionSum {
                parts,
                sum,
                expected: total,
            });
        }
        let mut offsets = Vec::with_capacity(parts.len() + 1);
        offsets.push(0);
        let mut acc = 0;
        for &p in &parts {
            acc += p;
            offsets.push(acc);
        }
        Ok(Composition { parts, offsets })
    }

    /// Parse a comma-separated list of parts.
    pub fn parse(s: &str, total: usize) -> Result<Self, YangianError> {
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| YangianError::Config(format!("bad composition part {t:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Composition::new(parts, total)
    }

    /// Number of blocks n.
    pub fn n(&self) -> usize {
        self.parts.len()
    }

    /// Block size μ_a (1-based a).
    pub fn part(&self, a: usize) -> usize {
        self.parts[a - 1]
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Offset n_{a-1} = μ_1 + … + μ_{a-1}; global index of block-a row i is
    /// n_{a-1} + i.
    pub fn offset(&self, a: usize) -> usize {
        self.offsets[a - 1]
    }

    /// Total M+N.
    pub fn total(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    /// The reversed composition μ⃖ = (μ_n, …, μ_1).
    pub fn reversed(&self) -> Composition {
        let parts: Vec<usize> = self.parts.iter().rev().copied().collect();
        Composition::new(parts, self.total()).expect("reversal preserves the sum")
    }

    /// The suffix composition (μ_a, …, μ_n).
    pub fn suffix(&self, a: usize) -> Composition {
        let parts: Vec<usize> = self.parts[a - 1..].to_vec();
        let total = parts.iter().sum();
        Composition::new(parts, total).expect("suffix parts are positive")
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

/// Immutable ambient data of one super Yangian Y_{M|N}(σ) over GF(p).
///
/// The generator order used for PBW normal forms is lexicographic on
/// `(r, i, j)` ascending — low levels first.  Construction fixes the parity
/// table; everything else in the library reads parities from here.
pub struct AlgebraContext {
    field: PrimeField,
    m: usize,
    n: usize,
    sigma: Sequence01,
    /// Straightening fault injected for harness tests; `None` in real runs.
    fault: Option<EngineFault>,
    /// Memo table for two-letter straightening, shared by all clones.
    pub(crate) pair_cache: PairCache,
}

/// Deliberate engine corruption used to prove the harness actually fails
/// when the algebra is wrong.  Only the test harness and the hidden CLI
/// hook construct these.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EngineFault {
    /// Drop the `t = 0` term of every RTT bracket (visible in every
    /// characteristic, including p = 2).
    DropBracketTerm,
    /// Negate every RTT bracket (invisible at p = 2; kept for p > 2 tests).
    FlipBracketSign,
}

impl fmt::Debug for AlgebraContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AlgebraContext")
            .field("p", &self.field.p())
            .field("m", &self.m)
            .field("n", &self.n)
            .field("sigma", &self.sigma.to_string())
            .field("fault", &self.fault)
            .finish()
    }
}

impl AlgebraContext {
    /// Build the context for Y_{M|N}(σ) over GF(p).
    pub fn new(p: u64, m: usize, n: usize, sigma: Sequence01) -> Result<Arc<Self>, YangianError> {
        Self::with_fault(p, m, n, sigma, None)
    }

    /// Build a context with an injected engine fault (test harness only).
    pub fn with_fault(
        p: u64,
        m: usize,
        n: usize,
        sigma: Sequence01,
        fault: Option<EngineFault>,
    ) -> Result<Arc<Self>, YangianError> {
        let field = PrimeField::new(p)?;
        if sigma.len() != m + n {
            return Err(YangianError::SequenceLength {
                got: sigma.len(),
                expected: m + n,
            });
        }
        let (zeros, ones) = (sigma.zeros(), sigma.ones());
        if zeros != m || ones != n {
            return Err(YangianError::SequenceCounts { zeros, ones, m, n });
        }
        Ok(Arc::new(AlgebraContext {
            field,
            m,
            n,
            sigma,
            fault,
            pair_cache: PairCache::new(),
        }))
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn p(&self) -> u64 {
        self.field.p()
    }

    /// Number of even indices M.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of odd indices N.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Matrix size M+N.
    pub fn size(&self) -> usize {
        self.m + self.n
    }

    pub fn sigma(&self) -> &Sequence01 {
        &self.sigma
    }

    pub(crate) fn fault(&self) -> Option<EngineFault> {
        self.fault
    }

    /// The parity `|i|` of a 1-based index.
    #[inline]
    pub fn parity_of_index(&self, i: usize) -> u8 {
        self.sigma.digit(i)
    }

    /// Parity of the generator t_{i,j}^{(r)} (r ≥ 1): `|i| + |j| mod 2`.
    #[inline]
    pub fn generator_parity(&self, i: usize, j: usize) -> u8 {
        (self.sigma.digit(i) + self.sigma.digit(j)) % 2
    }

    /// Restricted parity `|i|_a` relative to a composition: the parity of
    /// global index n_{a-1} + i.
    pub fn restricted_parity(&self, mu: &Composition, a: usize, i: usize) -> u8 {
        assert!(
            a >= 1 && a <= mu.n() && i >= 1 && i <= mu.part(a),
            "restricted parity index out of range: a={a}, i={i}"
        );
        self.sigma.digit(mu.offset(a) + i)
    }

    /// Two contexts describe the same algebra (fault included, so faulty
    /// and clean contexts never mix).
    pub fn same_algebra(&self, other: &AlgebraContext) -> bool {
        self.field == other.field
            && self.m == other.m
            && self.n == other.n
            && self.sigma == other.sigma
            && self.fault == other.fault
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn context_parities_follow_sigma() {
        let ctx = AlgebraContext::new(2, 1, 1, Sequence01::parse("01").unwrap()).unwrap();
        assert_eq!(ctx.parity_of_index(1), 0);
        assert_eq!(ctx.parity_of_index(2), 1);

        let ctx = AlgebraContext::new(3, 2, 1, Sequence01::parse("010").unwrap()).unwrap();
        assert_eq!(ctx.parity_of_index(1), 0);
        assert_eq!(ctx.parity_of_index(2), 1);
        assert_eq!(ctx.parity_of_index(3), 0);
    }

    #[test]
    fn context_rejects_bad_inputs() {
        let s = Sequence01::parse("01").unwrap();
        assert!(matches!(
            AlgebraContext::new(4, 1, 1, s.clone()),
            Err(YangianError::NotPrime(4))
        ));
        assert!(AlgebraContext::new(2, 2, 1, s.clone()).is_err());
        assert!(AlgebraContext::new(2, 2, 0, s).is_err());
    }

    #[test]
    fn sequence_transforms() {
        let s = Sequence01::parse("0011").unwrap();
        assert_eq!(s.transform(SequenceTransform::Flip).to_string(), "1100");
        assert_eq!(s.transform(SequenceTransform::Reverse).to_string(), "1100");
        // σᵈ computed through the two-step definition: flip then reverse.
        let two_step = s
            .transform(SequenceTransform::Flip)
            .transform(SequenceTransform::Reverse);
        assert_eq!(s.transform(SequenceTransform::FlipReverse), two_step);

        let s = Sequence01::parse("010").unwrap();
        assert_eq!(
            s.transform(SequenceTransform::FlipReverse).to_string(),
            "101"
        );
        let two_step = s
            .transform(SequenceTransform::Flip)
            .transform(SequenceTransform::Reverse);
        assert_eq!(s.transform(SequenceTransform::FlipReverse), two_step);
    }

    #[test]
    fn parity_transform_identities_all_short_sequences() {
        // |i|_σ = |i|_{σˢ} + 1, |i|_σ = |M+N+1-i|_{σʳ}, |i|_σ = |M+N+1-i|_{σᵈ} + 1.
        for len in 1..=5usize {
            for bits in 0..(1u32 << len) {
                let digits: Vec<u8> = (0..len).map(|k| ((bits >> k) & 1) as u8).collect();
                let s = Sequence01::from_digits(digits).unwrap();
                let fs = s.transform(SequenceTransform::Flip);
                let rs = s.transform(SequenceTransform::Reverse);
                let ds = s.transform(SequenceTransform::FlipReverse);
                for i in 1..=len {
                    assert_eq!(s.digit(i), (fs.digit(i) + 1) % 2);
                    assert_eq!(s.digit(i), rs.digit(len + 1 - i));
                    assert_eq!(s.digit(i), (ds.digit(len + 1 - i) + 1) % 2);
                }
            }
        }
    }

    #[test]
    fn restricted_parity_examples() {
        let ctx = AlgebraContext::new(3, 2, 1, Sequence01::parse("010").unwrap()).unwrap();
        let mu = Composition::new(vec![1, 2], 3).unwrap();
        assert_eq!(ctx.restricted_parity(&mu, 2, 1), 1);
        assert_eq!(ctx.restricted_parity(&mu, 2, 2), 0);

        let ctx = AlgebraContext::new(3, 2, 1, Sequence01::parse("001").unwrap()).unwrap();
        let mu = Composition::new(vec![3], 3).unwrap();
        assert_eq!(ctx.restricted_parity(&mu, 1, 3), 1);
    }

    #[test]
    fn restricted_parity_matches_global_digit_everywhere() {
        let ctx = AlgebraContext::new(5, 2, 2, Sequence01::parse("0110").unwrap()).unwrap();
        for parts in [vec![4], vec![1, 3], vec![2, 2], vec![1, 1, 2], vec![1, 1, 1, 1]] {
            let mu = Composition::new(parts, 4).unwrap();
            for a in 1..=mu.n() {
                for i in 1..=mu.part(a) {
                    assert_eq!(
                        ctx.restricted_parity(&mu, a, i),
                        ctx.parity_of_index(mu.offset(a) + i)
                    );
                }
            }
        }
    }

    #[test]
    fn composition_validation() {
        assert!(Composition::new(vec![1, 1], 3).is_err());
        assert!(Composition::new(vec![1, 0, 2], 3).is_err());
        let mu = Composition::new(vec![1, 2], 3).unwrap();
        assert_eq!(mu.n(), 2);
        assert_eq!(mu.offset(1), 0);
        assert_eq!(mu.offset(2), 1);
        assert_eq!(mu.reversed().parts(), &[2, 1]);
        assert_eq!(mu.suffix(2).parts(), &[2]);
        assert_eq!(Composition::parse("1,2", 3).unwrap(), mu);
    }
}
