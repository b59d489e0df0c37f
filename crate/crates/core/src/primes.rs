//! Primality lookup for every integer up to a fixed bound.
//!
//! A problem of size `n` only ever asks about sums in `2..=2n`, so a sieve
//! built with [`PrimeSieve::for_problem_size`] answers every query the rest of
//! the crate makes. The sieve is immutable once built and can be shared freely
//! between threads.

use crate::error::{Error, Result};

/// Largest sieve limit accepted by [`PrimeSieve::new`]. One byte per entry, so
/// this is roughly 1 GiB.
pub const DEFAULT_SIEVE_CAP: usize = 1 << 30;

/// Sieve of Eratosthenes over `0..=limit`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeSieve {
    flags: Vec<bool>,
}

impl PrimeSieve {
    /// Builds a sieve answering primality for every `m <= limit`, subject to
    /// [`DEFAULT_SIEVE_CAP`].
    pub fn new(limit: usize) -> Result<Self> {
        Self::with_cap(limit, DEFAULT_SIEVE_CAP)
    }

    /// Sieve covering every sum that can occur for problem size `n`.
    pub fn for_problem_size(n: usize) -> Result<Self> {
        let limit = n.checked_mul(2).ok_or(Error::SieveTooLarge {
            requested: usize::MAX,
            cap: DEFAULT_SIEVE_CAP,
        })?;
        Self::new(limit)
    }

    pub fn with_cap(limit: usize, cap: usize) -> Result<Self> {
        if limit > cap {
            return Err(Error::SieveTooLarge {
                requested: limit,
                cap,
            });
        }
        let mut flags = vec![true; limit + 1];
        flags[0] = false;
        if limit >= 1 {
            flags[1] = false;
        }
        let mut p = 2;
        while p * p <= limit {
            if flags[p] {
                for multiple in (p * p..=limit).step_by(p) {
                    flags[multiple] = false;
                }
            }
            p += 1;
        }
        Ok(PrimeSieve { flags })
    }

    /// Largest integer with a stored answer.
    pub fn limit(&self) -> usize {
        self.flags.len() - 1
    }

    pub fn is_prime(&self, m: usize) -> Result<bool> {
        self.flags.get(m).copied().ok_or(Error::OutOfRange {
            value: m,
            limit: self.limit(),
        })
    }

    /// Unchecked lookup for hot loops whose range has already been validated.
    #[inline]
    pub(crate) fn flag(&self, m: usize) -> bool {
        self.flags[m]
    }

    /// Smallest prime strictly greater than `k`.
    ///
    /// Requires `limit >= 2k`, which is enough to find the answer whenever
    /// Bertrand's postulate holds. A sieve that is large enough but contains no
    /// prime in `(k, 2k]` yields [`Error::BertrandViolation`].
    pub fn least_prime_greater_than(&self, k: usize) -> Result<usize> {
        let upper = k.saturating_mul(2).max(2);
        if upper > self.limit() {
            return Err(Error::OutOfRange {
                value: upper,
                limit: self.limit(),
            });
        }
        (k + 1..=upper)
            .find(|&m| self.flags[m])
            .ok_or(Error::BertrandViolation { k })
    }

    /// Number of primes `p` with `p < bound`.
    pub fn count_primes_below(&self, bound: usize) -> Result<usize> {
        if bound > self.flags.len() {
            return Err(Error::OutOfRange {
                value: bound,
                limit: self.limit(),
            });
        }
        Ok(self.flags[..bound].iter().filter(|&&f| f).count())
    }

    /// All primes up to the limit, ascending.
    pub fn primes(&self) -> impl Iterator<Item = usize> + '_ {
        self.flags
            .iter()
            .enumerate()
            .filter_map(|(m, &f)| f.then_some(m))
    }
}
