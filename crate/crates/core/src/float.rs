//! Floating-point evaluation for urns far too large for exact arithmetic.
//!
//! Everything goes through `log Fail(n)`, picked among three routes:
//!
//! * a direct sum of `ln(1 - a/b)` terms when `min(n, K)` is small or the
//!   result is close to 0 (small cdf, where `1 - exp(x)` needs a small
//!   *absolute* error in `x`);
//! * four lookups in a table of `ln m!` for `N < LN_FACTORIAL_TABLE`;
//! * a Stirling-series difference `lnΓ(x+h) - lnΓ(x)` otherwise, which
//!   never forms `lnΓ(N)` itself.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::params::UrnParams;

/// Natural log of a probability; `-inf` stands for probability zero.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct LogProb(f64);

impl LogProb {
    pub const ZERO: LogProb = LogProb(f64::NEG_INFINITY);
    pub const ONE: LogProb = LogProb(0.0);

    /// Panics on NaN or positive values.
    pub fn new(value: f64) -> Self {
        assert!(value <= 0.0, "log-probability must be <= 0, got {value}");
        Self(value)
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn prob(self) -> f64 {
        self.0.exp()
    }

    /// `1 - exp(self)` without cancellation near 0.
    pub fn complement(self) -> f64 {
        -self.0.exp_m1()
    }
}

const LN_FACTORIAL_TABLE: usize = 4096;
const DIRECT_TERMS: u64 = 16;
const DIRECT_TERMS_NEAR_ZERO: u64 = 4096;
const NEAR_ZERO: f64 = -0.5;
const STIRLING_MIN: f64 = 20.0;
const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;

fn ln_factorial_table() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut exact = 1u64;
        (0..LN_FACTORIAL_TABLE)
            .map(|m| {
                if m <= 20 {
                    if m > 1 {
                        exact *= m as u64;
                    }
                    (exact as f64).ln()
                } else {
                    ln_gamma_stirling(m as f64 + 1.0)
                }
            })
            .collect()
    })
}

fn stirling_tail(x: f64) -> f64 {
    let r = 1.0 / x;
    let r2 = r * r;
    r * (1.0 / 12.0 - r2 * (1.0 / 360.0 - r2 * (1.0 / 1260.0 - r2 / 1680.0)))
}

fn ln_gamma_stirling(x: f64) -> f64 {
    debug_assert!(x >= STIRLING_MIN);
    (x - 0.5) * x.ln() - x + HALF_LN_2PI + stirling_tail(x)
}

/// `ln m!`.
pub fn ln_factorial(m: u64) -> f64 {
    match ln_factorial_table().get(m as usize) {
        Some(&v) => v,
        None => ln_gamma_stirling(m as f64 + 1.0),
    }
}

/// `lnΓ(x + h) - lnΓ(x)` for `x >= 1`, `h >= 0`.
///
/// Small `x` is shifted up with `Γ(x+1) = xΓ(x)`; the Stirling part is
/// written in terms of `ln(1 + h/x)` so no two huge logs are subtracted.
pub fn ln_gamma_ratio(x: f64, h: f64) -> f64 {
    debug_assert!(x >= 1.0 && h >= 0.0);
    if h == 0.0 {
        return 0.0;
    }
    let mut x = x;
    let mut acc = 0.0;
    while x < STIRLING_MIN {
        acc -= (h / x).ln_1p();
        x += 1.0;
    }
    let y = x + h;
    acc + (x - 0.5) * (h / x).ln_1p() + h * (y.ln() - 1.0) + (stirling_tail(y) - stirling_tail(x))
}

/// `ln(num / den)` for `0 < num <= den`, accurate in both regimes.
fn ln_ratio(num: u64, den: u64) -> f64 {
    if 2 * num > den {
        (-((den - num) as f64 / den as f64)).ln_1p()
    } else {
        (num as f64 / den as f64).ln()
    }
}

/// Sum of `min(n, K)` log-factors; every term has the same sign, so the
/// relative error stays near `min(n, K)` ulps.
fn log_fail_direct(total: u64, good: u64, n: u64) -> f64 {
    if n <= good {
        // prod_{k<n} (N-K-k)/(N-k)
        (0..n).map(|k| ln_ratio(total - good - k, total - k)).sum()
    } else {
        // prod_{i<K} (N-n-i)/(N-i)
        (0..good).map(|i| ln_ratio(total - n - i, total - i)).sum()
    }
}

fn log_fail_gamma(total: u64, good: u64, n: u64) -> f64 {
    if (total as usize) < LN_FACTORIAL_TABLE {
        let lf = ln_factorial_table();
        let (t, g, n) = (total as usize, good as usize, n as usize);
        return (lf[t - n] - lf[t]) - (lf[t - n - g] - lf[t - g]);
    }
    let (tf, gf, nf) = (total as f64, good as f64, n as f64);
    if n <= good {
        ln_gamma_ratio(tf - gf - nf + 1.0, nf) - ln_gamma_ratio(tf - nf + 1.0, nf)
    } else {
        ln_gamma_ratio(tf - nf - gf + 1.0, gf) - ln_gamma_ratio(tf - gf + 1.0, gf)
    }
}

/// `ln Fail(n) = ln C(N-n, K) - ln C(N, K)`.
pub fn log_fail(params: &UrnParams, n: u64) -> LogProb {
    if n == 0 {
        return LogProb::ONE;
    }
    if n > params.bad() {
        return LogProb::ZERO;
    }
    let (total, good) = (params.total(), params.good());
    let terms = n.min(good);
    let value = if terms <= DIRECT_TERMS {
        log_fail_direct(total, good, n)
    } else {
        let coarse = log_fail_gamma(total, good, n);
        if coarse > NEAR_ZERO && terms <= DIRECT_TERMS_NEAR_ZERO {
            log_fail_direct(total, good, n)
        } else {
            coarse
        }
    };
    LogProb(value.min(0.0))
}

/// `ln P(X = n)`; `n = 0` is a domain error.
pub fn log_pmf(params: &UrnParams, n: u64) -> Result<LogProb> {
    if n == 0 {
        return Err(Error::domain("log_pmf", "draw index must be >= 1"));
    }
    if n > params.max_draws() {
        return Ok(LogProb::ZERO);
    }
    let remaining = params.total() - n + 1;
    let value = log_fail(params, n - 1).value() + ln_ratio(params.good(), remaining);
    Ok(LogProb(value.min(0.0)))
}

pub fn pmf_float(params: &UrnParams, n: u64) -> Result<f64> {
    if n == 1 {
        // Fail(0) = 1 exactly
        return Ok(params.good() as f64 / params.total() as f64);
    }
    Ok(log_pmf(params, n)?.prob())
}

/// `P(X <= n) = 1 - Fail(n)`, clamped to `[0, 1]`.
pub fn cdf_float(params: &UrnParams, n: u64) -> f64 {
    log_fail(params, n).complement().clamp(0.0, 1.0)
}

pub fn mean_float(params: &UrnParams) -> f64 {
    (params.total() as f64 + 1.0) / (params.good() as f64 + 1.0)
}

pub fn variance_float(params: &UrnParams) -> f64 {
    let n = params.total() as f64;
    let k = params.good() as f64;
    let k1 = k + 1.0;
    k * (n - k) * (n + 1.0) / ((k + 2.0) * k1 * k1)
}
