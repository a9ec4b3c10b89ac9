use std::io;
use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension n={n} outside supported range {min}..={max}")]
    Dimension { n: u32, min: u32, max: u32 },

    #[error("cardinality k={k} out of range 0..={max} for Q_{n}")]
    Cardinality { n: u32, k: u64, max: u64 },

    #[error("type value t={t} exceeds {max} for dimension n={n}")]
    TypeValue { n: u32, t: u64, max: u64 },

    #[error("label {label} out of range 1..={max}")]
    Label { label: u64, max: u64 },

    #[error("{what} index {index} out of range {min}..={max}")]
    Index {
        what: &'static str,
        index: u64,
        min: u64,
        max: u64,
    },

    #[error("invalid host parameters n1={n1}, n2={n2}: {reason}")]
    Host { n1: u32, n2: u32, reason: &'static str },

    #[error("operation requires a {expected} host, got {found}")]
    HostKind {
        expected: &'static str,
        found: &'static str,
    },

    #[error("not a bijection: {0}")]
    NotBijection(String),

    #[error("malformed embedding file: {0}")]
    Format(String),

    #[error("entry {value} at position {index} exceeds the small-type cap {cap}")]
    EntryAboveCap { index: usize, value: u64, cap: u64 },

    #[error("odd entry {value} at position {index}; halving requires an even sequence")]
    OddEntry { index: usize, value: u64 },

    #[error("sequence violates {condition} at level (n={n}, n2={n2})")]
    Condition {
        condition: &'static str,
        n: u32,
        n2: u32,
    },

    #[error("sequence length {len} does not match 2^(n1-1)={expected}")]
    SeqLength { len: usize, expected: u64 },

    #[error("search space too large: {0}")]
    SearchTooLarge(String),

    #[error(transparent)]
    Io(#[from] io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
