use thiserror::Error;

/// Everything that can go wrong while sieving, constructing or counting.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A query touched a value the sieve has no answer for.
    #[error("value {value} is outside the sieve range 0..={limit}")]
    OutOfRange { value: usize, limit: usize },

    /// Requested sieve would exceed the configured memory cap.
    #[error("sieve limit {requested} exceeds the configured cap of {cap}")]
    SieveTooLarge { requested: usize, cap: usize },

    /// No prime in (k, 2k]. Bertrand's postulate says this cannot happen.
    #[error("no prime found in ({k}, {}]; Bertrand's postulate violated", 2 * .k)]
    BertrandViolation { k: usize },

    #[error("not a permutation: {0}")]
    MalformedPermutation(String),

    /// A counting method was asked for a size beyond its cap.
    #[error("n = {n} exceeds the {method} cap of {cap}")]
    CapExceeded {
        method: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
