use num_bigint::BigUint;
use num_traits::{One, Zero};

/// C(n, k) by the multiplicative running product. Every prefix
/// `C(n-k+i, i)` is an integer, so each division is exact.
///
/// Returns 0 for `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> BigUint {
    if k < 0 || k as u64 > n {
        return BigUint::zero();
    }
    choose(n, k as u64)
}

pub(crate) fn choose(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let base = n - k;
    let mut acc = BigUint::one();
    let mut i = 1;
    // Fold runs of factors into one word-sized multiply and divide. After
    // each run acc is C(base + i - 1, i - 1), still an integer.
    while i <= k {
        let (mut num, mut den) = (1u64, 1u64);
        while i <= k {
            match (num.checked_mul(base + i), den.checked_mul(i)) {
                (Some(a), Some(b)) => {
                    num = a;
                    den = b;
                    i += 1;
                }
                _ => break,
            }
        }
        acc *= num;
        acc /= den;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(7, 0), BigUint::from(1u32));
        assert_eq!(binomial(3, 5), BigUint::zero());
        assert_eq!(binomial(3, -1), BigUint::zero());
        assert_eq!(binomial(0, 0), BigUint::one());
    }

    #[test]
    fn matches_pascal_triangle() {
        let mut row = vec![BigUint::one()];
        for n in 1..=120u64 {
            let mut next = vec![BigUint::one(); n as usize + 1];
            for k in 1..n as usize {
                next[k] = &row[k - 1] + &row[k];
            }
            row = next;
            for (k, expected) in row.iter().enumerate() {
                assert_eq!(&binomial(n, k as i64), expected, "C({n},{k})");
            }
        }
    }

    #[test]
    fn word_sized_factors() {
        // factors near u64::MAX force one factor per run
        let n = u64::MAX - 1;
        assert_eq!(binomial(n, 1), BigUint::from(n));
        assert_eq!(binomial(n, 2), BigUint::from(n) * (n - 1) / 2u32);
    }

    #[test]
    fn large_does_not_overflow() {
        // C(200, 100) has 59 decimal digits.
        let c = binomial(200, 100);
        assert_eq!(
            c.to_string(),
            "90548514656103281165404177077484163874504589675413336841320"
        );
    }
}
