use num_bigint::BigUint;
use thiserror::Error;

/// Errors produced by the library. Every variant is a domain error: the
/// inputs were well-formed text but violate a mathematical precondition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("value {value} is outside 1..={n}")]
    OutOfRange { value: usize, n: usize },

    #[error("ground set size must be at least 1")]
    EmptyGroundSet,

    #[error("not a bijection: value {0} appears more than once")]
    NotBijection(usize),

    #[error("({0} {1}) is not a transposition")]
    InvalidTransposition(usize, usize),

    #[error("chain is not a prefix of a minimal factorisation of the long cycle")]
    NotMember,

    #[error("index {index} is outside 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("generator index {l} is outside 1..={max}")]
    GeneratorOutOfRange { l: usize, max: usize },

    #[error("the smaller entries of the chain are not non-decreasing")]
    NotSorted,

    #[error("chain length {k} must be smaller than n = {n}")]
    LengthTooLarge { k: usize, n: usize },

    #[error("{count} items exceed the enumeration cap of {cap}")]
    CapExceeded { count: BigUint, cap: u64 },

    #[error("duplicate value {0}")]
    Duplicate(usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
