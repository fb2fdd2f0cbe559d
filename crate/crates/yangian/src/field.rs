//! Prime field arithmetic for GF(p).
//!
//! All coefficients in the library are residues modulo a prime `p`, stored as
//! bare `u64` values in `0..p`.  Arithmetic goes through a [`PrimeField`]
//! handle rather than a wrapper type per residue: elements of the same
//! algebra always share one field, so carrying `p` inside every coefficient
//! would only add weight to the hot straightening loops.

use serde::Serialize;

use crate::error::YangianError;

/// A coefficient residue in `0..p`.  See [`PrimeField`] for the arithmetic.
pub type FieldElement = u64;

/// The prime field GF(p).
///
/// Construction checks primality, so a `PrimeField` value is a proof that
/// `p` is prime and every nonzero residue is invertible.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Create GF(p).  Fails if `p` is not prime.
    pub fn new(p: u64) -> Result<Self, YangianError> {
        if p < 2 || !is_prime(p) {
            return Err(YangianError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    /// The characteristic `p`.
    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    /// Reduce a signed integer into `0..p`.
    #[inline]
    pub fn from_i64(&self, n: i64) -> FieldElement {
        n.rem_euclid(self.p as i64) as u64
    }

    /// Reduce an unsigned integer into `0..p`.
    #[inline]
    pub fn from_u64(&self, n: u64) -> FieldElement {
        n % self.p
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        // p is small (fits comfortably in 32 bits for every supported use),
        // but go through u128 so the field is correct for any prime p < 2^63.
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    /// `(-1)^e` as a field element.
    #[inline]
    pub fn sign(&self, e: u8) -> FieldElement {
        if e % 2 == 0 {
            1
        } else {
            self.neg(1)
        }
    }

    /// Multiplicative inverse of a nonzero residue, via Fermat's little
    /// theorem (`a^(p-2)`).
    pub fn inv(&self, a: FieldElement) -> FieldElement {
        assert!(a != 0, "inverse of zero in GF({})", self.p);
        self.pow(a, self.p - 2)
    }

    /// `a^e` by square-and-multiply.
    pub fn pow(&self, mut a: FieldElement, mut e: u64) -> FieldElement {
        let mut acc = 1u64;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }
}

/// Deterministic primality test, sufficient for all `u64` inputs
/// (Miller-Rabin with a known-complete witness set).
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    // This witness set decides primality for every n < 3.3 * 10^24.
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, m);
        }
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_primes() {
        for n in [0u64, 1, 4, 6, 9, 15, 21, 25, 91, 561] {
            assert!(PrimeField::new(n).is_err(), "{n} accepted as prime");
        }
    }

    #[test]
    fn accepts_primes() {
        for n in [2u64, 3, 5, 7, 11, 13, 97, 101, 65537] {
            assert!(PrimeField::new(n).is_ok(), "{n} rejected");
        }
    }

    #[test]
    fn arithmetic_mod_5() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(f.add(3, 4), 2);
        assert_eq!(f.sub(1, 3), 3);
        assert_eq!(f.mul(3, 4), 2);
        assert_eq!(f.neg(2), 3);
        assert_eq!(f.from_i64(-1), 4);
        assert_eq!(f.sign(1), 4);
        assert_eq!(f.sign(2), 1);
    }

    #[test]
    fn inverses() {
        for p in [2u64, 3, 5, 7, 13] {
            let f = PrimeField::new(p).unwrap();
            for a in 1..p {
                assert_eq!(f.mul(a, f.inv(a)), 1, "a={a} p={p}");
            }
        }
    }
}
