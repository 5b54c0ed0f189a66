use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};

use super::choose;
use crate::error::{Error, Result};
use crate::params::UrnParams;
use crate::rational::ExactRational;

/// One support point with its exact pmf and cdf.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactRow {
    pub n: u64,
    pub pmf: ExactRational,
    pub cdf: ExactRational,
}

/// Walks the support in order, keeping the integer numerator `C(N-n, K)`
/// of `Fail(n)` and stepping it down with
/// `C(m-1, K) = C(m, K) * (m-K) / m`.
///
/// The pmf numerator is the difference of consecutive fail numerators
/// (Pascal's rule), so no per-point binomial is recomputed.
#[derive(Debug, Clone)]
pub struct ExactRows {
    params: UrnParams,
    denominator: BigInt,
    fail_num: BigUint,
    next: u64,
}

impl ExactRows {
    pub fn new(params: UrnParams) -> Self {
        let c = choose(params.total(), params.good());
        Self {
            params,
            denominator: BigInt::from(c.clone()),
            fail_num: c,
            next: 1,
        }
    }
}

impl Iterator for ExactRows {
    type Item = ExactRow;

    fn next(&mut self) -> Option<ExactRow> {
        let n = self.next;
        if n > self.params.max_draws() {
            return None;
        }
        self.next += 1;
        // m = N - (n-1) objects left before draw n
        let m = self.params.total() - n + 1;
        let k = self.params.good();
        let fail_next = &self.fail_num * (m - k) / m;
        let pmf_num = &self.fail_num - &fail_next;
        let cdf_num = &self.denominator - BigInt::from(fail_next.clone());
        self.fail_num = fail_next;
        Some(ExactRow {
            n,
            pmf: ExactRational::new(pmf_num, self.denominator.clone()),
            cdf: ExactRational::new(cdf_num, self.denominator.clone()),
        })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.params.max_draws() + 1).saturating_sub(self.next) as usize;
        (left, Some(left))
    }
}

/// The full exact pmf over `1..=N-K+1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PmfTable {
    params: UrnParams,
    probabilities: Vec<ExactRational>,
}

impl PmfTable {
    /// Largest support tabulated without complaint.
    pub const MAX_SUPPORT: u64 = 1_000_000;

    pub fn new(params: UrnParams) -> Result<Self> {
        if params.max_draws() > Self::MAX_SUPPORT {
            return Err(Error::ResourceLimit(format!(
                "support size {} exceeds {}",
                params.max_draws(),
                Self::MAX_SUPPORT
            )));
        }
        let probabilities = ExactRows::new(params).map(|row| row.pmf).collect();
        Ok(Self {
            params,
            probabilities,
        })
    }

    /// Panics unless there is exactly one entry per support point.
    pub(crate) fn from_probabilities(params: UrnParams, probabilities: Vec<ExactRational>) -> Self {
        assert_eq!(probabilities.len() as u64, params.max_draws());
        Self {
            params,
            probabilities,
        }
    }

    pub fn params(&self) -> &UrnParams {
        &self.params
    }

    /// Entry `i` is `P(X = i + 1)`.
    pub fn probabilities(&self) -> &[ExactRational] {
        &self.probabilities
    }

    pub fn pmf(&self, n: u64) -> Option<&ExactRational> {
        n.checked_sub(1)
            .and_then(|i| self.probabilities.get(i as usize))
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, &ExactRational)> + '_ {
        (1u64..).zip(self.probabilities.iter())
    }

    /// Prefix sums `F(1), ..., F(N-K+1)`.
    pub fn cumulative(&self) -> Vec<ExactRational> {
        let mut acc = ExactRational::zero();
        self.probabilities
            .iter()
            .map(|p| {
                acc = &acc + p;
                acc.clone()
            })
            .collect()
    }

    pub fn total_mass(&self) -> ExactRational {
        self.probabilities.iter().sum()
    }

    /// `sum n P(n)` by direct summation.
    pub fn mean(&self) -> ExactRational {
        self.iter()
            .map(|(n, p)| ExactRational::from_integer(n) * p)
            .sum()
    }

    /// `sum n^2 P(n) - mean^2` by direct summation.
    pub fn variance(&self) -> ExactRational {
        let second: ExactRational = self
            .iter()
            .map(|(n, p)| ExactRational::from_integer(n * n) * p)
            .sum();
        let m = self.mean();
        second - &m * &m
    }

    /// Indices attaining the maximum probability.
    pub fn argmax(&self) -> BTreeSet<u64> {
        let Some(best) = self.probabilities.iter().max() else {
            return BTreeSet::new();
        };
        self.iter()
            .filter(|(_, p)| *p == best)
            .map(|(n, _)| n)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{cdf, pmf};

    #[test]
    fn rows_agree_with_closed_forms() {
        for total in 1..=35 {
            for good in 1..=total {
                let p = UrnParams::new(total, good).unwrap();
                let rows: Vec<_> = ExactRows::new(p).collect();
                assert_eq!(rows.len() as u64, p.max_draws());
                for row in rows {
                    assert_eq!(row.pmf, pmf(&p, row.n).unwrap());
                    assert_eq!(row.cdf, cdf(&p, row.n));
                }
            }
        }
    }

    #[test]
    fn table_sums_to_one() {
        let t = PmfTable::new(UrnParams::new(10, 3).unwrap()).unwrap();
        assert_eq!(t.total_mass(), ExactRational::one());
        assert_eq!(t.probabilities()[0], ExactRational::new(3, 10));
        assert_eq!(t.mean(), ExactRational::new(11, 4));
        assert_eq!(t.variance(), ExactRational::new(231, 80));
        assert_eq!(t.cumulative().last(), Some(&ExactRational::one()));
        assert_eq!(t.pmf(0), None);
        assert_eq!(t.pmf(9), None);
    }

    #[test]
    fn argmax_handles_ties() {
        let t = PmfTable::new(UrnParams::new(4, 1).unwrap()).unwrap();
        assert_eq!(t.argmax(), BTreeSet::from([1, 2, 3, 4]));
        let t = PmfTable::new(UrnParams::new(6, 2).unwrap()).unwrap();
        assert_eq!(t.argmax(), BTreeSet::from([1]));
    }

    #[test]
    fn oversized_support_is_a_resource_error() {
        let p = UrnParams::new(10_000_000, 1).unwrap();
        assert!(matches!(PmfTable::new(p), Err(Error::ResourceLimit(_))));
    }
}
