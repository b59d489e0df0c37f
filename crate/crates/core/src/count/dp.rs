//! Permanent by dynamic programming over column subsets.
//!
//! `f(S)` counts the ways to give rows `1..=|S|` distinct columns forming
//! exactly `S`:
//!
//! ```text
//! f(∅) = 1
//! f(S) = Σ f(S \ {j})   over j ∈ S allowed in row |S|
//! ```
//!
//! and the permanent is `f({1..n})`. Subsets are processed one population
//! count at a time, so only two layers are ever resident. Within a layer the
//! subsets are stored in colexicographic order, which is the order Gosper's
//! hack produces, and located by their combinatorial rank
//! `Σ C(c_i, i + 1)` over the sorted elements `c_0 < c_1 < ...`.

use num_bigint::BigUint;
use rayon::prelude::*;

use super::adjacency::PrimeAdjacency;
use super::tally::Tally;

/// Subsets handled per parallel work item.
pub const DEFAULT_CHUNK: usize = 1 << 14;

/// Largest `n` for which every intermediate `f(S) <= |S|!` fits in a `u128`.
const U128_SAFE_N: usize = 34;

pub(crate) fn permanent(adj: &PrimeAdjacency, chunk: usize) -> BigUint {
    if adj.n() <= U128_SAFE_N {
        BigUint::from(run::<u128>(adj, chunk))
    } else {
        run::<BigUint>(adj, chunk)
    }
}

fn run<T: Tally>(adj: &PrimeAdjacency, chunk: usize) -> T {
    let n = adj.n();
    assert!(n < 64, "subset masks need n < 64");
    let chunk = chunk.max(1);
    let binom = Binomials::new(n);

    let mut prev = vec![T::one()];
    for size in 1..=n {
        let allowed = adj.row_mask(size);
        let mut next = vec![T::zero(); binom.get(n, size) as usize];
        next.par_chunks_mut(chunk)
            .enumerate()
            .for_each(|(ci, slots)| {
                let mut set = binom.unrank((ci * chunk) as u64, size);
                let mut elems = [0u8; 64];
                let mut with = [0u64; 64];
                let mut without = [0u64; 64];
                for slot in slots.iter_mut() {
                    if set & allowed != 0 {
                        // with[i] = C(c_i, i+1): c_i's share of the rank of `set`.
                        // without[i] = C(c_i, i): its share once an earlier element is gone.
                        let mut rest = set;
                        let mut i = 0;
                        while rest != 0 {
                            let c = rest.trailing_zeros() as usize;
                            elems[i] = c as u8;
                            with[i] = binom.get(c, i + 1);
                            without[i] = if i == 0 { 0 } else { binom.get(c, i) };
                            rest &= rest - 1;
                            i += 1;
                        }
                        let mut before = 0u64;
                        let mut after: u64 = without[1..size].iter().sum();
                        let mut acc = T::zero();
                        for t in 0..size {
                            if allowed >> elems[t] & 1 == 1 {
                                acc.add_assign_ref(&prev[(before + after) as usize]);
                            }
                            before += with[t];
                            if t + 1 < size {
                                after -= without[t + 1];
                            }
                        }
                        *slot = acc;
                    }
                    set = next_same_popcount(set);
                }
            });
        prev = next;
    }
    prev.pop()
        .expect("the full set is the only subset of size n")
}

/// Next larger integer with the same number of set bits (Gosper's hack).
#[inline]
fn next_same_popcount(set: u64) -> u64 {
    let low = set & set.wrapping_neg();
    let ripple = set.wrapping_add(low);
    if low == 0 {
        return 0;
    }
    (((ripple ^ set) >> 2) / low) | ripple
}

struct Binomials {
    rows: usize,
    table: Vec<u64>,
}

impl Binomials {
    fn new(n: usize) -> Self {
        let rows = n + 1;
        let mut table = vec![0u64; rows * rows];
        for a in 0..rows {
            table[a * rows] = 1;
            for b in 1..=a {
                table[a * rows + b] = table[(a - 1) * rows + b - 1] + table[(a - 1) * rows + b];
            }
        }
        Binomials { rows, table }
    }

    #[inline]
    fn get(&self, a: usize, b: usize) -> u64 {
        if b > a {
            0
        } else {
            self.table[a * self.rows + b]
        }
    }

    /// The `size`-subset with colex rank `rank`.
    fn unrank(&self, mut rank: u64, size: usize) -> u64 {
        let mut set = 0u64;
        let mut bound = self.rows - 1;
        for i in (1..=size).rev() {
            let mut c = bound;
            while self.get(c, i) > rank {
                c -= 1;
            }
            rank -= self.get(c, i);
            set |= 1 << c;
            bound = c;
        }
        set
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn colex_rank_matches_gosper_order() {
        let binom = Binomials::new(10);
        for size in 1..=10 {
            let mut set = (1u64 << size) - 1;
            for rank in 0..binom.get(10, size) {
                assert_eq!(binom.unrank(rank, size), set, "size {size} rank {rank}");
                set = next_same_popcount(set);
            }
        }
    }

    #[test]
    fn binomials() {
        let binom = Binomials::new(26);
        assert_eq!(binom.get(26, 13), 10_400_600);
        assert_eq!(binom.get(5, 0), 1);
        assert_eq!(binom.get(3, 5), 0);
    }
}
