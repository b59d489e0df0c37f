//! Witness construction by descending block reversal, plus validation of
//! arbitrary candidates.
//!
//! For the top value `k = n`, let `p` be the least prime above `k` and set
//! `a = p - k`. Reversing the interval `[a, k]` pairs `i` with `a + k - i`, so
//! every sum in the interval equals `p`. The interval below `a` is handled the
//! same way until nothing is left. Bertrand's postulate keeps `p < 2k`, hence
//! `a < k` and every step makes progress. The only block with `a = k` is the
//! fixed point `(1, 1)` with sum `2`.
//!
//! Points below `a` are untouched by the reversal of `[a, k]`; they are then
//! permuted by the lower blocks, so the composite witness does not fix them.

use crate::error::{Error, Result};
use crate::permutation::{check_bijection, Permutation};
use crate::primes::PrimeSieve;

/// One reversed interval `[low, high]` whose sums all equal `prime`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Block {
    pub low: usize,
    pub high: usize,
    pub prime: usize,
}

impl Block {
    pub fn contains(&self, i: usize) -> bool {
        (self.low..=self.high).contains(&i)
    }
}

/// Blocks in descending order; their intervals partition `{1, ..., n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    blocks: Vec<Block>,
}

impl BlockDecomposition {
    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// Size of the covered set.
    pub fn n(&self) -> usize {
        self.blocks.first().map_or(0, |b| b.high)
    }

    /// Expands the blocks into the witness permutation.
    pub fn to_permutation(&self) -> Permutation {
        let mut image = vec![0; self.n()];
        for b in &self.blocks {
            for i in b.low..=b.high {
                image[i - 1] = b.prime - i;
            }
        }
        Permutation::from_image_unchecked(image)
    }
}

/// Splits `{1, ..., n}` into reversal blocks. `n = 0` gives no blocks.
pub fn decompose_blocks(n: usize, sieve: &PrimeSieve) -> Result<BlockDecomposition> {
    let needed = n.saturating_mul(2);
    if needed > sieve.limit() {
        return Err(Error::OutOfRange {
            value: needed,
            limit: sieve.limit(),
        });
    }
    let mut blocks = Vec::new();
    let mut high = n;
    while high > 0 {
        let prime = sieve.least_prime_greater_than(high)?;
        let low = prime - high;
        if low > high || (low == high && high > 1) {
            return Err(Error::BertrandViolation { k: high });
        }
        blocks.push(Block { low, high, prime });
        high = low - 1;
    }
    Ok(BlockDecomposition { blocks })
}

/// A permutation of `{1, ..., n}` whose sums `k + π(k)` are all prime.
///
/// The result is an involution and is fully determined by `n`.
pub fn construct_prime_sum_permutation(n: usize, sieve: &PrimeSieve) -> Result<Permutation> {
    Ok(decompose_blocks(n, sieve)?.to_permutation())
}

/// True iff every sum `k + π(k)` is prime. Vacuously true for `n = 0`.
pub fn is_valid_solution(perm: &Permutation, sieve: &PrimeSieve) -> Result<bool> {
    check_sieve_covers(perm.n(), sieve)?;
    Ok(perm.sums().all(|s| sieve.flag(s)))
}

/// Validates a raw one-line image, reporting a malformed permutation as an
/// error rather than assuming it away.
pub fn validate_image(image: &[usize], sieve: &PrimeSieve) -> Result<bool> {
    check_bijection(image)?;
    check_sieve_covers(image.len(), sieve)?;
    Ok(image
        .iter()
        .enumerate()
        .all(|(i, &v)| sieve.flag(i + 1 + v)))
}

fn check_sieve_covers(n: usize, sieve: &PrimeSieve) -> Result<()> {
    let needed = n.saturating_mul(2);
    if needed > sieve.limit() && n > 0 {
        return Err(Error::OutOfRange {
            value: needed,
            limit: sieve.limit(),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sieve() -> PrimeSieve {
        PrimeSieve::new(4000).unwrap()
    }

    fn trial_division(m: usize) -> bool {
        m >= 2
            && (2..)
                .take_while(|d| d * d <= m)
                .all(|d| !m.is_multiple_of(d))
    }

    fn triples(d: &BlockDecomposition) -> Vec<(usize, usize, usize)> {
        d.blocks()
            .iter()
            .map(|b| (b.low, b.high, b.prime))
            .collect()
    }

    #[test]
    fn decompositions() {
        let s = sieve();
        assert_eq!(
            triples(&decompose_blocks(5, &s).unwrap()),
            [(2, 5, 7), (1, 1, 2)]
        );
        assert_eq!(triples(&decompose_blocks(1, &s).unwrap()), [(1, 1, 2)]);
        assert_eq!(triples(&decompose_blocks(4, &s).unwrap()), [(1, 4, 5)]);
        assert!(decompose_blocks(0, &s).unwrap().blocks().is_empty());
    }

    #[test]
    fn witnesses() {
        let s = sieve();
        assert_eq!(
            construct_prime_sum_permutation(5, &s).unwrap().image(),
            [1, 5, 4, 3, 2]
        );
        assert_eq!(construct_prime_sum_permutation(1, &s).unwrap().image(), [1]);
        let four = construct_prime_sum_permutation(4, &s).unwrap();
        assert_eq!(four.image(), [4, 3, 2, 1]);
        assert!(four.sums().all(|x| x == 5));
        assert_eq!(construct_prime_sum_permutation(0, &s).unwrap().n(), 0);
    }

    #[test]
    fn sieve_too_small() {
        let small = PrimeSieve::new(9).unwrap();
        assert!(matches!(
            decompose_blocks(5, &small),
            Err(Error::OutOfRange { .. })
        ));
        let p = Permutation::identity(5);
        assert!(matches!(
            is_valid_solution(&p, &small),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn validates_exhibits() {
        let s = sieve();
        let check =
            |v: &[usize]| is_valid_solution(&Permutation::new(v.to_vec()).unwrap(), &s).unwrap();
        assert!(check(&[1, 5, 4, 3, 2]));
        assert!(!check(&[3, 2, 1, 5, 4]));
        assert!(check(&[2, 1, 4, 3]));
        assert!(check(&[2, 1]));
        assert!(check(&[1, 3, 2]));
        assert!(check(&[]));
        assert!(matches!(
            validate_image(&[1, 1, 2], &s),
            Err(Error::MalformedPermutation(_))
        ));
    }

    #[test]
    fn blocks_are_well_formed() {
        let s = sieve();
        for n in 1..=2000 {
            let d = decompose_blocks(n, &s).unwrap();
            let blocks = d.blocks();
            assert_eq!(blocks[0].high, n);
            assert_eq!(blocks.last().unwrap().low, 1);
            for pair in blocks.windows(2) {
                assert_eq!(pair[1].high, pair[0].low - 1);
            }
            for b in blocks {
                assert_eq!(b.low + b.high, b.prime);
                assert_eq!(s.least_prime_greater_than(b.high).unwrap(), b.prime);
                assert!(b.low < b.high || (b.low, b.high, b.prime) == (1, 1, 2));
            }
        }
    }

    #[test]
    fn validator_matches_direct_loop() {
        let s = sieve();
        for n in 0..=300 {
            let p = construct_prime_sum_permutation(n, &s).unwrap();
            let direct = (1..=n).all(|k| trial_division(k + p.apply(k)));
            assert!(direct);
            assert_eq!(is_valid_solution(&p, &s).unwrap(), direct);
            assert!(p.is_involution());
            let shifted = Permutation::new((1..=n).map(|k| k % n.max(1) + 1).collect()).unwrap();
            let direct = (1..=n).all(|k| trial_division(k + shifted.apply(k)));
            assert_eq!(is_valid_solution(&shifted, &s).unwrap(), direct);
        }
    }
}
