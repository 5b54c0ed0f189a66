//! Closed forms for the binomial sums behind the mean and variance.

use num_bigint::BigUint;

use super::choose;
use crate::error::{Error, Result};

/// `sum_{j=k}^{n} C(j, k) = C(n+1, k+1)` (hockey stick).
pub fn sum_binom_closed(k: u64, n: u64) -> Result<BigUint> {
    if n < k {
        return Err(Error::domain("sum_binom_closed", format!("need N >= K, got K={k}, N={n}")));
    }
    Ok(choose(n + 1, k + 1))
}

/// `sum_{j=x}^{n} C(j, k) = C(n+1, k+1) - C(x, k+1)` for `k <= x <= n`.
pub fn sum_binom_from_closed(x: u64, k: u64, n: u64) -> Result<BigUint> {
    if x < k || x > n {
        return Err(Error::domain(
            "sum_binom_from_closed",
            format!("need K <= x <= N, got x={x}, K={k}, N={n}"),
        ));
    }
    Ok(choose(n + 1, k + 1) - choose(x, k + 1))
}

/// `sum_{j=k}^{n} j C(j, k) = n C(n+1, k+1) - C(n+1, k+2)`.
pub fn sum_j_binom_closed(k: u64, n: u64) -> Result<BigUint> {
    if n < k {
        return Err(Error::domain("sum_j_binom_closed", format!("need N >= K, got K={k}, N={n}")));
    }
    Ok(choose(n + 1, k + 1) * n - choose(n + 1, k + 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn direct(k: u64, range: std::ops::RangeInclusive<u64>, weighted: bool) -> BigUint {
        range
            .map(|j| {
                let c = choose(j, k);
                if weighted {
                    c * j
                } else {
                    c
                }
            })
            .sum()
    }

    #[test]
    fn hockey_stick_examples() {
        assert_eq!(sum_binom_closed(2, 4).unwrap(), BigUint::from(10u32));
        assert_eq!(sum_binom_closed(0, 3).unwrap(), BigUint::from(4u32));
        assert_eq!(sum_binom_closed(3, 3).unwrap(), BigUint::from(1u32));
        assert!(sum_binom_closed(4, 3).is_err());
    }

    #[test]
    fn partial_sum_examples() {
        assert_eq!(sum_binom_from_closed(2, 2, 4).unwrap(), BigUint::from(10u32));
        assert_eq!(sum_binom_from_closed(3, 2, 4).unwrap(), BigUint::from(9u32));
        assert_eq!(sum_binom_from_closed(5, 1, 5).unwrap(), BigUint::from(5u32));
        assert!(sum_binom_from_closed(1, 2, 4).is_err());
        assert!(sum_binom_from_closed(5, 2, 4).is_err());
    }

    #[test]
    fn weighted_sum_examples() {
        assert_eq!(sum_j_binom_closed(1, 3).unwrap(), BigUint::from(14u32));
        assert_eq!(sum_j_binom_closed(2, 2).unwrap(), BigUint::from(2u32));
        assert_eq!(sum_j_binom_closed(2, 4).unwrap(), BigUint::from(35u32));
        assert!(sum_j_binom_closed(3, 2).is_err());
    }

    proptest! {
        #[test]
        fn closed_forms_match_direct_sums(k in 0u64..120, extra in 0u64..120, xoff in 0u64..120) {
            let n = k + extra;
            let x = k + xoff % (extra + 1);
            prop_assert_eq!(sum_binom_closed(k, n).unwrap(), direct(k, k..=n, false));
            prop_assert_eq!(sum_binom_from_closed(x, k, n).unwrap(), direct(k, x..=n, false));
            prop_assert_eq!(sum_j_binom_closed(k, n).unwrap(), direct(k, k..=n, true));
        }
    }
}
