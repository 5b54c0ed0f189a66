use std::ops::RangeInclusive;

use crate::error::{Error, Result};

/// An urn of `total` objects of which `good` are good.
///
/// Construction enforces `1 <= good <= total`. With no good object the
/// first success never happens and there is no distribution to describe.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct UrnParams {
    total: u64,
    good: u64,
}

impl UrnParams {
    pub fn new(total: u64, good: u64) -> Result<Self> {
        if good == 0 || good > total {
            return Err(Error::InvalidParams { total, good });
        }
        Ok(Self { total, good })
    }

    /// N, the number of objects in the urn.
    #[inline]
    pub fn total(&self) -> u64 {
        self.total
    }

    /// K, the number of good objects.
    #[inline]
    pub fn good(&self) -> u64 {
        self.good
    }

    #[inline]
    pub fn bad(&self) -> u64 {
        self.total - self.good
    }

    /// Largest draw index with positive probability, N - K + 1.
    #[inline]
    pub fn max_draws(&self) -> u64 {
        self.bad() + 1
    }

    /// The support `[1, N - K + 1]`.
    pub fn support(&self) -> RangeInclusive<u64> {
        1..=self.max_draws()
    }

    #[inline]
    pub fn in_support(&self, n: u64) -> bool {
        (1..=self.max_draws()).contains(&n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_no_good_objects() {
        assert_eq!(
            UrnParams::new(5, 0),
            Err(Error::InvalidParams { total: 5, good: 0 })
        );
        assert!(UrnParams::new(0, 0).is_err());
    }

    #[test]
    fn rejects_more_good_than_total() {
        assert!(UrnParams::new(3, 4).is_err());
    }

    #[test]
    fn support_examples() {
        assert_eq!(UrnParams::new(10, 3).unwrap().support(), 1..=8);
        assert_eq!(UrnParams::new(5, 5).unwrap().support(), 1..=1);
        assert_eq!(UrnParams::new(2, 1).unwrap().support(), 1..=2);
    }
}
