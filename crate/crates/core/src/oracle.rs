//! Ground truth that shares no code with the closed forms: exhaustive
//! enumeration of good-object placements, and Monte Carlo tallies.

use itertools::Itertools;
use statrs::distribution::{ChiSquared, ContinuousCDF};

use crate::error::{Error, Result};
use crate::exact::PmfTable;
use crate::params::UrnParams;
use crate::rational::ExactRational;
use crate::sampler::{sample_urn_walk, SamplerState};

/// Default bound on N for [`enumerate_pmf`]; C(20, 10) = 184756 subsets.
pub const ENUMERATION_LIMIT: u64 = 20;

/// Exact pmf by listing every placement of the K good objects among the
/// N positions. A uniformly shuffled urn puts the good objects on a
/// uniformly random K-subset, and the first good draw is that subset's
/// smallest position.
pub fn enumerate_pmf(params: &UrnParams) -> Result<PmfTable> {
    enumerate_pmf_with_limit(params, ENUMERATION_LIMIT)
}

pub fn enumerate_pmf_with_limit(params: &UrnParams, limit: u64) -> Result<PmfTable> {
    if params.total() > limit {
        return Err(Error::ResourceLimit(format!(
            "enumeration needs N <= {limit}, got N={}",
            params.total()
        )));
    }
    let mut counts = vec![0u64; params.max_draws() as usize];
    let mut placements = 0u64;
    for subset in (1..=params.total()).combinations(params.good() as usize) {
        counts[(subset[0] - 1) as usize] += 1;
        placements += 1;
    }
    let probabilities = counts
        .into_iter()
        .map(|c| ExactRational::new(c, placements))
        .collect();
    Ok(PmfTable::from_probabilities(*params, probabilities))
}

/// Outcome counts from repeated sampling. `counts[i]` tallies draw index
/// `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmpiricalPmf {
    pub params: UrnParams,
    pub counts: Vec<u64>,
    pub trials: u64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChiSquareTest {
    pub statistic: f64,
    pub degrees_of_freedom: u64,
    pub p_value: f64,
}

impl EmpiricalPmf {
    pub fn frequency(&self, n: u64) -> f64 {
        n.checked_sub(1)
            .and_then(|i| self.counts.get(i as usize))
            .map_or(0.0, |&c| c as f64 / self.trials as f64)
    }

    pub fn mean(&self) -> f64 {
        let total: f64 = (1u64..)
            .zip(&self.counts)
            .map(|(n, &c)| n as f64 * c as f64)
            .sum();
        total / self.trials as f64
    }

    /// Pearson goodness of fit against `expected`. Adjacent cells are
    /// pooled from the right until each expected count is at least 5.
    pub fn chi_square(&self, expected: &PmfTable) -> ChiSquareTest {
        assert_eq!(expected.params(), &self.params);
        let trials = self.trials as f64;
        let mut cells: Vec<(f64, f64)> = Vec::new();
        let mut pending = (0.0, 0.0);
        for (p, &count) in expected.probabilities().iter().zip(&self.counts) {
            pending.0 += count as f64;
            pending.1 += p.to_f64() * trials;
            if pending.1 >= 5.0 {
                cells.push(pending);
                pending = (0.0, 0.0);
            }
        }
        if pending.1 > 0.0 || pending.0 > 0.0 {
            match cells.last_mut() {
                Some(last) => {
                    last.0 += pending.0;
                    last.1 += pending.1;
                }
                None => cells.push(pending),
            }
        }
        let statistic: f64 = cells
            .iter()
            .map(|&(obs, exp)| (obs - exp) * (obs - exp) / exp)
            .sum();
        let dof = cells.len().saturating_sub(1) as u64;
        let p_value = if dof == 0 {
            1.0
        } else {
            let dist = ChiSquared::new(dof as f64).expect("dof > 0");
            dist.sf(statistic)
        };
        ChiSquareTest {
            statistic,
            degrees_of_freedom: dof,
            p_value,
        }
    }
}

/// Tally `trials` draws of [`sample_urn_walk`].
pub fn mc_estimate(params: &UrnParams, trials: u64, state: &mut SamplerState) -> Result<EmpiricalPmf> {
    if trials == 0 {
        return Err(Error::domain("mc_estimate", "need at least one trial"));
    }
    let mut counts = vec![0u64; params.max_draws() as usize];
    for _ in 0..trials {
        counts[(sample_urn_walk(params, state) - 1) as usize] += 1;
    }
    Ok(EmpiricalPmf {
        params: *params,
        counts,
        trials,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact;

    fn urn(total: u64, good: u64) -> UrnParams {
        UrnParams::new(total, good).unwrap()
    }

    fn q(num: i64, den: i64) -> ExactRational {
        ExactRational::new(num, den)
    }

    #[test]
    fn enumeration_examples() {
        let t = enumerate_pmf(&urn(3, 1)).unwrap();
        assert_eq!(t.probabilities(), &[q(1, 3), q(1, 3), q(1, 3)]);
        let t = enumerate_pmf(&urn(3, 2)).unwrap();
        assert_eq!(t.probabilities(), &[q(2, 3), q(1, 3)]);
        let t = enumerate_pmf(&urn(2, 2)).unwrap();
        assert_eq!(t.probabilities(), &[ExactRational::one()]);
    }

    #[test]
    fn enumeration_guard() {
        assert!(matches!(enumerate_pmf(&urn(21, 3)), Err(Error::ResourceLimit(_))));
        assert!(enumerate_pmf_with_limit(&urn(21, 20), 21).is_ok());
    }

    #[test]
    fn enumeration_matches_closed_form() {
        for total in 1..=12 {
            for good in 1..=total {
                let p = urn(total, good);
                let brute = enumerate_pmf(&p).unwrap();
                assert_eq!(brute, PmfTable::new(p).unwrap());
                assert_eq!(brute.mean(), exact::mean(&p));
                assert_eq!(brute.variance(), exact::variance(&p));
            }
        }
    }

    #[test]
    fn mc_degenerate_urn() {
        let mut s = SamplerState::new(1);
        let e = mc_estimate(&urn(5, 5), 100, &mut s).unwrap();
        assert_eq!(e.counts, vec![100]);
        assert!(mc_estimate(&urn(5, 5), 0, &mut s).is_err());
    }

    #[test]
    fn mc_mean_within_four_sigma() {
        let p = urn(10, 3);
        let mut s = SamplerState::new(20_240_101);
        let trials = 1_000_000;
        let e = mc_estimate(&p, trials, &mut s).unwrap();
        assert_eq!(e.counts.iter().sum::<u64>(), trials);
        let sd = (231.0 / 80.0 / trials as f64).sqrt();
        assert!((e.mean() - 2.75).abs() < 4.0 * sd, "mean {}", e.mean());
    }

    #[test]
    fn mc_uniform_bins_within_four_sigma() {
        let p = urn(4, 1);
        let mut s = SamplerState::new(4);
        let trials = 100_000;
        let e = mc_estimate(&p, trials, &mut s).unwrap();
        let band = 4.0 * (0.25 * 0.75 / trials as f64).sqrt();
        for n in 1..=4 {
            assert!((e.frequency(n) - 0.25).abs() < band, "bin {n}: {}", e.frequency(n));
        }
    }

    #[test]
    fn chi_square_flags_a_biased_sample() {
        let p = urn(10, 3);
        let table = PmfTable::new(p).unwrap();
        let mut counts: Vec<u64> = table
            .probabilities()
            .iter()
            .map(|w| (w.to_f64() * 100_000.0).round() as u64)
            .collect();
        let trials = counts.iter().sum();
        let fair = EmpiricalPmf { params: p, counts: counts.clone(), trials };
        assert!(fair.chi_square(&table).p_value > 0.99);
        counts[0] += 1500;
        counts[1] -= 1500;
        let biased = EmpiricalPmf { params: p, counts, trials };
        assert!(biased.chi_square(&table).p_value < 1e-6);
    }

    #[test]
    fn chi_square_pools_small_cells() {
        let p = urn(40, 20);
        let table = PmfTable::new(p).unwrap();
        let mut s = SamplerState::new(3);
        let e = mc_estimate(&p, 1000, &mut s).unwrap();
        let t = e.chi_square(&table);
        assert!(t.degrees_of_freedom < p.max_draws() - 1);
        assert!(t.statistic.is_finite());
    }
}
