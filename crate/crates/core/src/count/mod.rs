//! Exact counting and enumeration of prime-sum permutations.
//!
//! Three independent counters are provided:
//!
//! * **naive**: depth-first search over the adjacency rows, or (with
//!   `strict_all_permutations`) a literal walk over all `n!` permutations.
//!   This is the oracle, capped at small `n`.
//! * **dp**: the permanent by subset dynamic programming, layered by
//!   population count.
//! * **ryser**: the permanent by Ryser's formula in Gray-code order.
//!
//! All of them agree exactly; the crate's tests hold them to that.

mod adjacency;
mod dp;
mod enumerate;
mod naive;
mod ryser;
mod tally;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use adjacency::PrimeAdjacency;
pub use enumerate::Solutions;

use crate::error::{Error, Result};
use crate::primes::PrimeSieve;

/// Literal all-permutations iteration is never run beyond this size.
pub const STRICT_ALL_PERMUTATIONS_CAP: usize = 10;

/// Subset masks are `u64`, which bounds the permanent methods.
pub const MASK_CAP: usize = 63;

/// `auto` uses the naive counter up to this size.
pub const AUTO_NAIVE_MAX: usize = 8;

/// Exact number of solutions; unbounded.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SolutionCount(pub BigUint);

impl SolutionCount {
    pub fn value(&self) -> &BigUint {
        &self.0
    }
}

impl From<u64> for SolutionCount {
    fn from(v: u64) -> Self {
        SolutionCount(BigUint::from(v))
    }
}

impl fmt::Display for SolutionCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for SolutionCount {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.parse::<BigUint>()
            .map(SolutionCount)
            .map_err(|_| Error::Parse(format!("`{s}` is not a decimal count")))
    }
}

/// Counts travel as decimal strings so JSON consumers never truncate them.
impl Serialize for SolutionCount {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for SolutionCount {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Naive,
    Dp,
    Ryser,
    Auto,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Naive => "naive",
            Method::Dp => "dp",
            Method::Ryser => "ryser",
            Method::Auto => "auto",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "naive" => Ok(Method::Naive),
            "dp" => Ok(Method::Dp),
            "ryser" => Ok(Method::Ryser),
            "auto" => Ok(Method::Auto),
            other => Err(Error::Parse(format!(
                "unknown method `{other}` (expected naive, dp, ryser or auto)"
            ))),
        }
    }
}

/// Size caps and switches for the counters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountConfig {
    pub naive_cap: usize,
    pub dp_cap: usize,
    pub ryser_cap: usize,
    /// Make the naive method walk all `n!` permutations instead of
    /// backtracking.
    pub strict_all_permutations: bool,
    pub dp_chunk: usize,
    pub ryser_chunk: u64,
}

impl Default for CountConfig {
    fn default() -> Self {
        CountConfig {
            naive_cap: 10,
            dp_cap: 26,
            ryser_cap: 24,
            strict_all_permutations: false,
            dp_chunk: dp::DEFAULT_CHUNK,
            ryser_chunk: ryser::DEFAULT_CHUNK,
        }
    }
}

impl CountConfig {
    fn cap_for(&self, method: Method) -> usize {
        match method {
            Method::Naive if self.strict_all_permutations => {
                self.naive_cap.min(STRICT_ALL_PERMUTATIONS_CAP)
            }
            Method::Naive => self.naive_cap.min(MASK_CAP),
            Method::Dp => self.dp_cap.min(MASK_CAP),
            Method::Ryser => self.ryser_cap.min(MASK_CAP),
            Method::Auto => self.dp_cap.min(MASK_CAP),
        }
    }

    /// The concrete method `method` stands for at size `n`, after checking the
    /// size against its cap.
    pub fn resolve(&self, method: Method, n: usize) -> Result<Method> {
        let concrete = match method {
            Method::Auto if n <= AUTO_NAIVE_MAX.min(self.naive_cap) => Method::Naive,
            Method::Auto => Method::Dp,
            m => m,
        };
        let cap = self.cap_for(concrete);
        if n > cap {
            return Err(Error::CapExceeded {
                method: concrete.name(),
                n,
                cap,
            });
        }
        Ok(concrete)
    }
}

pub fn build_adjacency(n: usize, sieve: &PrimeSieve) -> Result<PrimeAdjacency> {
    PrimeAdjacency::new(n, sieve)
}

pub fn count_solutions(
    n: usize,
    method: Method,
    sieve: &PrimeSieve,
    config: &CountConfig,
) -> Result<SolutionCount> {
    let method = config.resolve(method, n)?;
    let adj = PrimeAdjacency::new(n, sieve)?;
    if n == 0 {
        return Ok(SolutionCount::from(1));
    }
    let value = match method {
        Method::Naive if config.strict_all_permutations => naive::count_all_permutations(n, sieve),
        Method::Naive => naive::count_backtracking(&adj),
        Method::Dp => dp::permanent(&adj, config.dp_chunk),
        Method::Ryser => ryser::permanent(&adj, config.ryser_chunk),
        Method::Auto => unreachable!("resolve never returns Auto"),
    };
    Ok(SolutionCount(value))
}

pub fn count_solutions_naive(
    n: usize,
    sieve: &PrimeSieve,
    config: &CountConfig,
) -> Result<SolutionCount> {
    count_solutions(n, Method::Naive, sieve, config)
}

pub fn count_solutions_dp(
    n: usize,
    sieve: &PrimeSieve,
    config: &CountConfig,
) -> Result<SolutionCount> {
    count_solutions(n, Method::Dp, sieve, config)
}

pub fn count_solutions_ryser(
    n: usize,
    sieve: &PrimeSieve,
    config: &CountConfig,
) -> Result<SolutionCount> {
    count_solutions(n, Method::Ryser, sieve, config)
}

/// Permanent by subset DP with an explicit work-item size. The result does not
/// depend on `chunk`.
pub fn permanent_dp(adj: &PrimeAdjacency, chunk: usize) -> Result<SolutionCount> {
    check_mask_cap("dp", adj.n())?;
    if adj.n() == 0 {
        return Ok(SolutionCount::from(1));
    }
    Ok(SolutionCount(dp::permanent(adj, chunk)))
}

/// Permanent by Ryser's formula with an explicit work-item size. The result
/// does not depend on `chunk`.
pub fn permanent_ryser(adj: &PrimeAdjacency, chunk: u64) -> Result<SolutionCount> {
    check_mask_cap("ryser", adj.n())?;
    Ok(SolutionCount(ryser::permanent(adj, chunk)))
}

fn check_mask_cap(method: &'static str, n: usize) -> Result<()> {
    if n > MASK_CAP {
        return Err(Error::CapExceeded {
            method,
            n,
            cap: MASK_CAP,
        });
    }
    Ok(())
}

/// Streams every solution in lexicographic order, stopping after `limit`
/// items when given.
pub fn enumerate_solutions(
    n: usize,
    sieve: &PrimeSieve,
    limit: Option<usize>,
) -> Result<Solutions> {
    Ok(Solutions::new(PrimeAdjacency::new(n, sieve)?, limit))
}

/// One line of the solution-count table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceRow {
    pub n: usize,
    pub count: SolutionCount,
    pub primes_below_2n: usize,
}

pub fn sequence_row(
    n: usize,
    method: Method,
    sieve: &PrimeSieve,
    config: &CountConfig,
) -> Result<SequenceRow> {
    Ok(SequenceRow {
        n,
        count: count_solutions(n, method, sieve, config)?,
        primes_below_2n: sieve.count_primes_below(2 * n)?,
    })
}

/// Rows for `n = 1..=max_n`. Caps are checked for `max_n` before any work is
/// done.
pub fn sequence_table(
    max_n: usize,
    method: Method,
    config: &CountConfig,
) -> Result<Vec<SequenceRow>> {
    config.resolve(method, max_n)?;
    let sieve = PrimeSieve::for_problem_size(max_n)?;
    (1..=max_n)
        .map(|n| sequence_row(n, method, &sieve, config))
        .collect()
}
