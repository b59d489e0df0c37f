//! Permanent by Ryser's inclusion–exclusion formula
//!
//! ```text
//! per(M) = (-1)^n Σ_{S ⊆ columns} (-1)^|S| Π_i |row_i ∩ S|
//! ```
//!
//! with subsets visited in reflected Gray-code order. Consecutive subsets
//! differ in one column, so the `n` row sums are updated by ±1 instead of
//! being recomputed. The index range `0..2^n` is cut into contiguous pieces
//! that run in parallel; each piece starts from the Gray code of its first
//! index and the partial sums are added exactly.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use super::adjacency::PrimeAdjacency;

/// Gray-code steps handled per parallel work item.
pub const DEFAULT_CHUNK: u64 = 1 << 16;

pub(crate) fn permanent(adj: &PrimeAdjacency, chunk: u64) -> BigUint {
    let n = adj.n();
    assert!(n < 64, "subset masks need n < 64");
    if n == 0 {
        return BigUint::from(1u32);
    }
    let chunk = chunk.max(1);
    let total = 1u64 << n;
    let pieces = total.div_ceil(chunk);

    // Rows touched when column j enters or leaves the subset.
    let column_rows: Vec<Vec<usize>> = (1..=n)
        .map(|j| {
            (1..=n)
                .filter(|&i| adj.contains(i, j))
                .map(|i| i - 1)
                .collect()
        })
        .collect();
    let row_masks: Vec<u64> = (1..=n).map(|i| adj.row_mask(i)).collect();

    let partials: Vec<BigInt> = (0..pieces)
        .into_par_iter()
        .map(|p| {
            let start = p * chunk;
            let end = (start + chunk).min(total);
            piece(&row_masks, &column_rows, start, end)
        })
        .collect();

    let mut sum: BigInt = partials.into_iter().sum();
    if n % 2 == 1 {
        sum = -sum;
    }
    assert!(
        !sum.is_negative(),
        "permanent of a 0/1 matrix is nonnegative"
    );
    sum.magnitude().clone()
}

/// Σ (-1)^|S| Π_i |row_i ∩ S| over the Gray codes of indices `start..end`.
fn piece(row_masks: &[u64], column_rows: &[Vec<usize>], start: u64, end: u64) -> BigInt {
    let mut set = start ^ (start >> 1);
    let mut sums: Vec<u32> = row_masks.iter().map(|&r| (r & set).count_ones()).collect();
    let mut zeros = sums.iter().filter(|&&s| s == 0).count();
    let mut acc = Accumulator::default();

    let mut visit = |set: u64, sums: &[u32], zeros: usize| {
        if zeros == 0 {
            acc.add(set.count_ones() % 2 == 1, sums);
        }
    };
    visit(set, &sums, zeros);

    for index in start + 1..end {
        let col = index.trailing_zeros() as usize;
        let entering = set >> col & 1 == 0;
        set ^= 1 << col;
        for &r in &column_rows[col] {
            if entering {
                if sums[r] == 0 {
                    zeros -= 1;
                }
                sums[r] += 1;
            } else {
                sums[r] -= 1;
                if sums[r] == 0 {
                    zeros += 1;
                }
            }
        }
        visit(set, &sums, zeros);
    }
    acc.finish()
}

/// Signed running total kept in an `i128` and spilled to a big integer when
/// the fast path would overflow.
#[derive(Default)]
struct Accumulator {
    fast: i128,
    spill: BigInt,
}

impl Accumulator {
    fn add(&mut self, negative: bool, factors: &[u32]) {
        let product = factors
            .iter()
            .try_fold(1u128, |p, &f| p.checked_mul(f as u128))
            .and_then(|p| i128::try_from(p).ok());
        match product {
            Some(p) => {
                let next = if negative {
                    self.fast.checked_sub(p)
                } else {
                    self.fast.checked_add(p)
                };
                match next {
                    Some(v) => self.fast = v,
                    None => {
                        self.spill += BigInt::from(std::mem::take(&mut self.fast));
                        self.fast = if negative { -p } else { p };
                    }
                }
            }
            None => {
                let big: BigUint = factors.iter().map(|&f| BigUint::from(f)).product();
                let sign = if negative { Sign::Minus } else { Sign::Plus };
                self.spill += BigInt::from_biguint(sign, big);
            }
        }
    }

    fn finish(self) -> BigInt {
        if self.spill.is_zero() {
            BigInt::from(self.fast)
        } else {
            self.spill + BigInt::from(self.fast)
        }
    }
}
