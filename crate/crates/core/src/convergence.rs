//! Distance to the geometric law as N grows with K/N held fixed.

use crate::error::{Error, Result};
use crate::float::pmf_float;
use crate::params::UrnParams;

/// One row of a convergence report.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceRecord {
    pub total: u64,
    pub good: u64,
    /// K / N
    pub p: f64,
    pub tv_distance: f64,
    pub max_pointwise_error: f64,
    /// Draw index where `max_pointwise_error` is attained.
    pub at_n: u64,
}

/// `(1-p)^(n-1) p` for `0 < p <= 1`, `n >= 1`.
pub fn geometric_pmf(p: f64, n: u64) -> Result<f64> {
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::domain("geometric_pmf", format!("p must lie in (0, 1], got {p}")));
    }
    if n == 0 {
        return Err(Error::domain("geometric_pmf", "draw index must be >= 1"));
    }
    Ok(geometric_unchecked(p, n))
}

fn geometric_unchecked(p: f64, n: u64) -> f64 {
    if n == 1 {
        p
    } else {
        p * geometric_tail(p, n - 1)
    }
}

/// `P(Y > m) = (1-p)^m`.
fn geometric_tail(p: f64, m: u64) -> f64 {
    if m == 0 {
        1.0
    } else if p == 1.0 {
        0.0
    } else {
        (m as f64 * (-p).ln_1p()).exp()
    }
}

fn urn_p(params: &UrnParams) -> f64 {
    params.good() as f64 / params.total() as f64
}

/// Scan the support once, returning the L1 gap over it and the largest
/// pointwise gap (with its index), with the first point past the support
/// also considered, where only the geometric law has mass.
fn scan(params: &UrnParams) -> (f64, f64, u64) {
    let p = urn_p(params);
    let mut l1 = 0.0;
    let mut worst = (0.0, 1);
    for n in params.support() {
        let urn = pmf_float(params, n).expect("n >= 1");
        let gap = (urn - geometric_unchecked(p, n)).abs();
        l1 += gap;
        if gap > worst.0 {
            worst = (gap, n);
        }
    }
    let beyond = params.max_draws() + 1;
    let gap = geometric_unchecked(p, beyond);
    if gap > worst.0 {
        worst = (gap, beyond);
    }
    (l1, worst.0, worst.1)
}

/// Total-variation distance between the urn law and `Geometric(K/N)`.
///
/// The geometric mass beyond the urn support, `(1-p)^(N-K+1)`, enters in
/// closed form, so there is no truncation.
pub fn tv_distance(params: &UrnParams) -> f64 {
    let (l1, _, _) = scan(params);
    let tail = geometric_tail(urn_p(params), params.max_draws());
    (0.5 * (l1 + tail)).clamp(0.0, 1.0)
}

pub fn convergence_record(params: &UrnParams) -> ConvergenceRecord {
    let (l1, max_err, at_n) = scan(params);
    let p = urn_p(params);
    let tail = geometric_tail(p, params.max_draws());
    ConvergenceRecord {
        total: params.total(),
        good: params.good(),
        p,
        tv_distance: (0.5 * (l1 + tail)).clamp(0.0, 1.0),
        max_pointwise_error: max_err,
        at_n,
    }
}

/// One record per `N` in `totals`, in the given order, with
/// `K = N * p_num / p_den` required to be an integer.
pub fn convergence_table(p_num: u64, p_den: u64, totals: &[u64]) -> Result<Vec<ConvergenceRecord>> {
    if p_num == 0 || p_num >= p_den {
        return Err(Error::domain(
            "convergence_table",
            format!("p = {p_num}/{p_den} must lie strictly between 0 and 1"),
        ));
    }
    if totals.is_empty() {
        return Err(Error::domain("convergence_table", "list of N is empty"));
    }
    let params = totals
        .iter()
        .map(|&total| {
            let scaled = total as u128 * p_num as u128;
            if !scaled.is_multiple_of(p_den as u128) {
                return Err(Error::NonIntegerGood { total, p_num, p_den });
            }
            UrnParams::new(total, (scaled / p_den as u128) as u64)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(params.iter().map(convergence_record).collect())
}
