//! Exact symbolic computation in modular super Yangians.
//!
//! The library constructs the super Yangian Y_{M|N}(σ) over a prime field
//! GF(p) from its RTT presentation, normalizes elements against a PBW
//! basis, assembles parabolic (block Gauss) generators for arbitrary
//! compositions, and mechanically verifies the identities of the parabolic
//! presentation at configurable truncation orders.
//!
//! Layout:
//! - [`context`] — field, size, 01-sequence, compositions, parities;
//! - [`pbw`] — straightening engine, Yangian and current-algebra elements,
//!   tensor square with the coproduct;
//! - [`series`] — matrices of truncated generating series in u, v, w;
//! - [`gauss`] — block Gauss decomposition and quasideterminants;
//! - [`maps`] — the (anti)automorphisms and shift homomorphisms;
//! - [`relations`] — the identity registry, checkers, and reports.

pub mod context;
pub mod error;
pub mod field;
pub mod gauss;
pub mod maps;
pub mod pbw;
pub mod relations;
pub mod series;

pub use context::{AlgebraContext, Composition, Sequence01, SequenceTransform};
pub use error::YangianError;
pub use field::{FieldElement, PrimeField};
pub use pbw::{CurrentAlgebraElement, Element, Gen, Strategy, TensorElement, Word};
