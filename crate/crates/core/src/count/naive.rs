//! Ground-truth counters. Slow on purpose; every faster method is checked
//! against these.

use num_bigint::BigUint;

use super::adjacency::{BitIter, PrimeAdjacency};
use crate::primes::PrimeSieve;

/// Depth-first search over rows `1..=n`, trying only columns the row allows.
pub(crate) fn count_backtracking(adj: &PrimeAdjacency) -> BigUint {
    fn descend(adj: &PrimeAdjacency, row: usize, free: u64) -> u128 {
        if row > adj.n() {
            return 1;
        }
        BitIter(adj.row_mask(row) & free)
            .map(|b| descend(adj, row + 1, free & !(1 << b)))
            .sum()
    }
    let n = adj.n();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    BigUint::from(descend(adj, 1, all))
}

/// Walks every one of the `n!` permutations in lexicographic order and tests
/// each sum against the sieve, with no pruning at all.
pub(crate) fn count_all_permutations(n: usize, sieve: &PrimeSieve) -> BigUint {
    let mut image: Vec<usize> = (1..=n).collect();
    let mut count = 0u128;
    loop {
        if image
            .iter()
            .enumerate()
            .all(|(i, &v)| sieve.flag(i + 1 + v))
        {
            count += 1;
        }
        if !next_permutation(&mut image) {
            break;
        }
    }
    BigUint::from(count)
}

/// Advances to the next permutation in lexicographic order; false once the
/// last one has been passed (the slice is then sorted ascending again).
fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        v.reverse();
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
