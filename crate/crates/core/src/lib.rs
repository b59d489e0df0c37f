//! Prime-sum permutations: bijections π of `{1, ..., n}` such that every
//! `k + π(k)` is prime.
//!
//! The crate builds an explicit witness for every `n` ([`construct`]),
//! validates candidates, and counts or lists all solutions exactly with
//! several independent algorithms ([`count`]).
//!
//! ```
//! use primeperm::{construct_prime_sum_permutation, is_valid_solution, PrimeSieve};
//!
//! let sieve = PrimeSieve::for_problem_size(5).unwrap();
//! let witness = construct_prime_sum_permutation(5, &sieve).unwrap();
//! assert_eq!(witness.to_string(), "1,5,4,3,2");
//! assert!(is_valid_solution(&witness, &sieve).unwrap());
//! ```

pub mod cli;
pub mod construct;
pub mod count;
pub mod error;
pub mod permutation;
pub mod primes;

pub use construct::{
    construct_prime_sum_permutation, decompose_blocks, is_valid_solution, validate_image, Block,
    BlockDecomposition,
};
pub use count::{
    build_adjacency, count_solutions, count_solutions_dp, count_solutions_naive,
    count_solutions_ryser, enumerate_solutions, sequence_row, sequence_table, CountConfig, Method,
    PrimeAdjacency, SequenceRow, SolutionCount, Solutions,
};
pub use error::{Error, Result};
pub use permutation::Permutation;
pub use primes::PrimeSieve;
