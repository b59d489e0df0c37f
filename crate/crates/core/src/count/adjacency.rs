use crate::error::{Error, Result};
use crate::primes::PrimeSieve;

/// 0/1 matrix with `M[i][j] = 1` iff `i + j` is prime, for `1 <= i, j <= n`.
///
/// Row `i` is the set of legal images `π(i)`. Each row is a bitset of
/// `words_per_row` little-endian `u64` words; bit `j - 1` stands for column
/// `j`. The number of valid permutations is the permanent of this matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeAdjacency {
    n: usize,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl PrimeAdjacency {
    pub fn new(n: usize, sieve: &PrimeSieve) -> Result<Self> {
        let needed = n.saturating_mul(2);
        if n > 0 && needed > sieve.limit() {
            return Err(Error::OutOfRange {
                value: needed,
                limit: sieve.limit(),
            });
        }
        let words_per_row = n.div_ceil(64).max(1);
        let mut bits = vec![0u64; n * words_per_row];
        for i in 1..=n {
            let row = &mut bits[(i - 1) * words_per_row..i * words_per_row];
            for j in 1..=n {
                if sieve.flag(i + j) {
                    row[(j - 1) / 64] |= 1 << ((j - 1) % 64);
                }
            }
        }
        Ok(PrimeAdjacency {
            n,
            words_per_row,
            bits,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn words_per_row(&self) -> usize {
        self.words_per_row
    }

    /// Row `i` (1-based) as bitset words.
    pub fn row_words(&self, i: usize) -> &[u64] {
        &self.bits[(i - 1) * self.words_per_row..i * self.words_per_row]
    }

    /// Row `i` as a single mask. Only meaningful when `n <= 64`.
    pub fn row_mask(&self, i: usize) -> u64 {
        assert!(self.n <= 64, "row_mask needs n <= 64, got {}", self.n);
        self.bits[i - 1]
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.row_words(i)[(j - 1) / 64] >> ((j - 1) % 64) & 1 == 1
    }

    /// Columns allowed in row `i`, ascending.
    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.row_words(i)
            .iter()
            .enumerate()
            .flat_map(|(w, &word)| BitIter(word).map(move |b| w * 64 + b + 1))
    }

    pub fn degree(&self, i: usize) -> usize {
        self.row_words(i)
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    pub fn is_symmetric(&self) -> bool {
        (1..=self.n).all(|i| (1..=self.n).all(|j| self.contains(i, j) == self.contains(j, i)))
    }
}

/// Indices of set bits, ascending.
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(n: usize) -> Vec<Vec<usize>> {
        let sieve = PrimeSieve::for_problem_size(n).unwrap();
        let adj = PrimeAdjacency::new(n, &sieve).unwrap();
        (1..=n).map(|i| adj.neighbors(i).collect()).collect()
    }

    #[test]
    fn small_matrices() {
        assert_eq!(rows(1), [vec![1]]);
        assert_eq!(rows(2), [vec![1, 2], vec![1]]);
        assert_eq!(rows(3)[2], [2]);
    }

    #[test]
    fn symmetric_and_multiword() {
        for n in [1, 7, 63, 64, 65, 130] {
            let sieve = PrimeSieve::for_problem_size(n).unwrap();
            let adj = PrimeAdjacency::new(n, &sieve).unwrap();
            assert!(adj.is_symmetric(), "n = {n}");
            for i in 1..=n {
                let expected: Vec<usize> = (1..=n)
                    .filter(|&j| sieve.is_prime(i + j).unwrap())
                    .collect();
                assert_eq!(adj.neighbors(i).collect::<Vec<_>>(), expected);
                assert_eq!(adj.degree(i), expected.len());
            }
        }
    }

    #[test]
    fn needs_a_large_enough_sieve() {
        let sieve = PrimeSieve::new(9).unwrap();
        assert!(PrimeAdjacency::new(5, &sieve).is_err());
        assert!(PrimeAdjacency::new(4, &sieve).is_ok());
    }
}
