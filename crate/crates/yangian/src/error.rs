//! Error type shared across the library.

use thiserror::Error;

/// Errors raised by context construction, series plumbing, and map
/// application.  Verification *failures* (an identity that does not hold)
/// are ordinary data carried in reports, not errors.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum YangianError {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("01-sequence has length {got}, expected M+N = {expected}")]
    SequenceLength { got: usize, expected: usize },

    #[error("01-sequence has {zeros} zeros and {ones} ones, expected M = {m} and N = {n}")]
    SequenceCounts {
        zeros: usize,
        ones: usize,
        m: usize,
        n: usize,
    },

    #[error("01-sequence contains a character other than '0' or '1'")]
    SequenceDigit,

    #[error("composition {parts:?} sums to {sum}, expected {expected}")]
    CompositionSum {
        parts: Vec<usize>,
        sum: usize,
        expected: usize,
    },

    #[error("composition parts must be positive")]
    CompositionZeroPart,

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("elements belong to different algebra contexts")]
    ContextMismatch,

    #[error("series have incompatible variables or truncation orders")]
    SeriesIncompatible,

    #[error("series inversion requires constant coefficient 1")]
    SeriesNotUnital,

    #[error("matrix inversion requires leading coefficient matrix I")]
    MatrixNotUnital,

    #[error("map cannot be applied: {0}")]
    MapError(String),

    #[error("generator level {level} exceeds the truncation order {order} of this map")]
    LevelAboveTruncation { level: usize, order: usize },

    #[error("straightening exceeded its step budget ({0} steps): non-termination suspected")]
    StepBudgetExceeded(u64),

    #[error("{0}")]
    Config(String),
}
