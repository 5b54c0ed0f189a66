//! Exact rational evaluation of the first-success distribution.
//!
//! Drawing without replacement from an urn of N objects, K of them good,
//! X is the index of the first good draw. All quantities are ratios of
//! binomial coefficients:
//!
//! * `Fail(n) = C(N-n, K) / C(N, K)`, the chance the first n draws are bad
//! * `P(n) = Fail(n-1) * K / (N-n+1)` on `1..=N-K+1`
//! * `F(n) = 1 - Fail(n)`
//! * `E[X] = (N+1)/(K+1)`, `Var[X] = K(N-K)(N+1) / ((K+2)(K+1)^2)`

mod binomial;
mod identities;
mod table;

use std::ops::RangeInclusive;

use num_bigint::{BigInt, BigUint};

pub use binomial::binomial;
pub(crate) use binomial::choose;
pub use identities::{sum_binom_closed, sum_binom_from_closed, sum_j_binom_closed};
pub use table::{ExactRow, ExactRows, PmfTable};

use crate::error::{Error, Result};
use crate::params::UrnParams;
use crate::rational::ExactRational;

/// Probability that the first `n` draws are all bad.
///
/// Equal to 1 at `n = 0` and 0 once `n` exceeds the number of bad objects.
pub fn fail_probability(params: &UrnParams, n: u64) -> ExactRational {
    if n > params.bad() {
        return ExactRational::zero();
    }
    let total = params.total();
    let good = params.good();
    ratio(choose(total - n, good), choose(total, good))
}

/// `P(X = n)`. Zero past the support; `n = 0` is a domain error.
pub fn pmf(params: &UrnParams, n: u64) -> Result<ExactRational> {
    if n == 0 {
        return Err(Error::domain("pmf", "draw index must be >= 1"));
    }
    if n > params.max_draws() {
        return Ok(ExactRational::zero());
    }
    let total = params.total();
    let good = params.good();
    let remaining = total - n + 1;
    let num = choose(remaining, good) * good;
    let den = choose(total, good) * remaining;
    Ok(ratio(num, den))
}

/// `P(X <= n)`; 0 at `n = 0` and 1 from the end of the support onwards.
pub fn cdf(params: &UrnParams, n: u64) -> ExactRational {
    ExactRational::one() - fail_probability(params, n)
}

pub fn mean(params: &UrnParams) -> ExactRational {
    ExactRational::new(params.total() + 1, params.good() + 1)
}

pub fn variance(params: &UrnParams) -> ExactRational {
    let n = BigInt::from(params.total());
    let k = BigInt::from(params.good());
    let num = &k * (&n - &k) * (&n + 1u32);
    let k1 = &k + 1u32;
    let den = (&k + 2u32) * &k1 * &k1;
    ExactRational::new(num, den)
}

/// Smallest `m` with `C(N-m, K) <= C(N, K) / 2`, i.e. the smallest `m`
/// with `F(m) >= 1/2`.
///
/// Binary search over the support; `F` is monotone and `F(N-K+1) = 1`.
pub fn median(params: &UrnParams) -> u64 {
    let total = params.total();
    let good = params.good();
    let twice_half = choose(total, good);
    let reached = |m: u64| choose(total - m, good) * 2u32 <= twice_half;
    let (mut lo, mut hi) = (1, params.max_draws());
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if reached(mid) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    lo
}

/// All most-probable draw indices, as a contiguous range.
///
/// For K > 1 the pmf strictly decreases, so the mode is `{1}`. For K = 1
/// every index in `1..=N` has probability `1/N`.
pub fn mode(params: &UrnParams) -> RangeInclusive<u64> {
    if params.good() == 1 {
        params.support()
    } else {
        1..=1
    }
}

pub fn support(params: &UrnParams) -> RangeInclusive<u64> {
    params.support()
}

fn ratio(num: BigUint, den: BigUint) -> ExactRational {
    ExactRational::new(BigInt::from(num), BigInt::from(den))
}
