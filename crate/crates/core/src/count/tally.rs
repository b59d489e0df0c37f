use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Nonnegative accumulator for the subset DP.
///
/// `u128` is used whenever the caller can bound every intermediate value; its
/// addition is still checked so a wrong bound fails loudly instead of wrapping.
pub(crate) trait Tally: Clone + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn add_assign_ref(&mut self, other: &Self);
}

impl Tally for u128 {
    fn zero() -> Self {
        0
    }

    fn one() -> Self {
        1
    }

    #[inline]
    fn add_assign_ref(&mut self, other: &Self) {
        *self = self.checked_add(*other).expect("u128 tally overflowed");
    }
}

impl Tally for BigUint {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
}
