//! Self-verification sweep: every closed form against an independent
//! computation, for all urns up to a given size.

use std::fmt;

use num_bigint::BigUint;

use crate::exact::{self, choose};
use crate::oracle::enumerate_pmf_with_limit;
use crate::params::UrnParams;
use crate::rational::ExactRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckOptions {
    pub max_n: u64,
    /// Enumeration runs only for N up to this bound.
    pub enumeration_limit: u64,
}

impl CheckOptions {
    pub fn new(max_n: u64) -> Self {
        Self {
            max_n,
            enumeration_limit: crate::oracle::ENUMERATION_LIMIT,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub total: u64,
    pub good: u64,
    pub n: Option<u64>,
    pub detail: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "N={} K={}", self.total, self.good)?;
        if let Some(n) = self.n {
            write!(f, " n={n}")?;
        }
        write!(f, ": {}", self.detail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyReport {
    pub name: &'static str,
    pub checked: u64,
    pub failed: u64,
    pub first_failure: Option<Counterexample>,
}

impl FamilyReport {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            checked: 0,
            failed: 0,
            first_failure: None,
        }
    }

    fn record(&mut self, ok: bool, failure: impl FnOnce() -> Counterexample) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(failure());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub options: CheckOptions,
    pub families: Vec<FamilyReport>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.families.iter().all(FamilyReport::passed)
    }

    /// First failure in family order.
    pub fn first_failure(&self) -> Option<(&'static str, &Counterexample)> {
        self.families
            .iter()
            .find_map(|f| f.first_failure.as_ref().map(|c| (f.name, c)))
    }
}

/// Runs every family against the library's own pmf.
pub fn run_checks(options: CheckOptions) -> CheckReport {
    run_checks_with(options, |p, n| exact::pmf(p, n).expect("n >= 1"))
}

/// Runs every family with `pmf` standing in for the closed-form pmf.
pub fn run_checks_with<F>(options: CheckOptions, pmf: F) -> CheckReport
where
    F: Fn(&UrnParams, u64) -> ExactRational,
{
    let mut enumeration = FamilyReport::new("enumeration");
    let mut normalization = FamilyReport::new("normalization");
    let mut cdf = FamilyReport::new("cdf_prefix_sums");
    let mut product = FamilyReport::new("fail_product_form");
    let mut ratio = FamilyReport::new("pmf_ratio");
    let mut moments = FamilyReport::new("moments");
    let mut median = FamilyReport::new("median");
    let mut mode = FamilyReport::new("mode");
    let mut lemmas = FamilyReport::new("lemma_identities");

    let half = ExactRational::new(1, 2);
    for total in 1..=options.max_n {
        for good in 1..=total {
            let p = UrnParams::new(total, good).expect("1 <= K <= N");
            let ce = |n: Option<u64>, detail: String| Counterexample { total, good, n, detail };
            let values: Vec<ExactRational> = p.support().map(|n| pmf(&p, n)).collect();

            if total <= options.enumeration_limit {
                let brute = enumerate_pmf_with_limit(&p, options.enumeration_limit)
                    .expect("within limit");
                for ((n, want), got) in brute.iter().zip(&values) {
                    enumeration.record(want == got, || {
                        ce(Some(n), format!("pmf {got} but enumeration gives {want}"))
                    });
                }
            }

            let mass: ExactRational = values.iter().sum();
            normalization.record(mass == ExactRational::one(), || {
                ce(None, format!("pmf sums to {mass}"))
            });

            let mut acc = ExactRational::zero();
            let mut prefix = Vec::with_capacity(values.len());
            for (n, v) in (1u64..).zip(&values) {
                acc = &acc + v;
                let closed = exact::cdf(&p, n);
                cdf.record(closed == acc, || {
                    ce(Some(n), format!("cdf {closed} but prefix sum {acc}"))
                });
                prefix.push(acc.clone());
            }

            let mut running = ExactRational::one();
            for n in 1..=p.bad() {
                running = running * ExactRational::new(p.bad() - n + 1, total - n + 1);
                let closed = exact::fail_probability(&p, n);
                product.record(closed == running, || {
                    ce(Some(n), format!("Fail {closed} but product {running}"))
                });
            }

            if good == 1 {
                let flat = ExactRational::new(1, total);
                for (n, v) in (1u64..).zip(&values) {
                    ratio.record(*v == flat, || ce(Some(n), format!("pmf {v}, expected 1/{total}")));
                }
            } else {
                for (n, pair) in (1u64..).zip(values.windows(2)) {
                    let want = ExactRational::new(total - n, total - n + 1 - good);
                    let ok = !pair[1].is_zero() && &pair[0] / &pair[1] == want && want > ExactRational::one();
                    ratio.record(ok, || {
                        ce(Some(n), format!("P(n)={} P(n+1)={}, ratio should be {want}", pair[0], pair[1]))
                    });
                }
            }

            let m1: ExactRational = (1u64..).zip(&values).map(|(n, v)| ExactRational::from_integer(n) * v).sum();
            let m2: ExactRational = (1u64..).zip(&values).map(|(n, v)| ExactRational::from_integer(n * n) * v).sum();
            let var = m2 - &m1 * &m1;
            let (mean_cf, var_cf) = (exact::mean(&p), exact::variance(&p));
            moments.record(m1 == mean_cf, || ce(None, format!("sum n P(n) = {m1}, closed form {mean_cf}")));
            moments.record(var == var_cf, || ce(None, format!("variance by summation {var}, closed form {var_cf}")));

            let med = exact::median(&p);
            let scan = (1u64..).zip(&prefix).find(|(_, c)| **c >= half).map(|(m, _)| m);
            let full = choose(total, good);
            let by_binom = p.support().find(|&m| choose(total - m, good) * 2u32 <= full);
            median.record(scan == Some(med) && by_binom == Some(med), || {
                ce(None, format!("median {med}, cdf scan {scan:?}, binomial scan {by_binom:?}"))
            });

            let best = values.iter().max().expect("non-empty support");
            let argmax: Vec<u64> = (1u64..).zip(&values).filter(|(_, v)| *v == best).map(|(n, _)| n).collect();
            let claimed: Vec<u64> = exact::mode(&p).collect();
            mode.record(argmax == claimed, || ce(None, format!("mode {claimed:?}, argmax {argmax:?}")));
        }
    }

    for n in 0..=options.max_n {
        for k in 0..=n {
            let ce = |detail: String| Counterexample { total: n, good: k, n: None, detail };
            let mut direct = BigUint::from(0u32);
            let mut weighted = BigUint::from(0u32);
            for j in k..=n {
                let c = choose(j, k);
                weighted += &c * j;
                direct += c;
            }
            let closed = exact::sum_binom_closed(k, n).expect("k <= n");
            lemmas.record(closed == direct, || ce(format!("hockey stick {closed} vs {direct}")));
            let closed = exact::sum_j_binom_closed(k, n).expect("k <= n");
            lemmas.record(closed == weighted, || ce(format!("weighted sum {closed} vs {weighted}")));
            // sum_{j=x}^{n} built from the top down
            let mut tail = BigUint::from(0u32);
            for x in (k..=n).rev() {
                tail += choose(x, k);
                let closed = exact::sum_binom_from_closed(x, k, n).expect("k <= x <= n");
                lemmas.record(closed == tail, || ce(format!("partial sum from x={x}: {closed} vs {tail}")));
            }
        }
    }

    CheckReport {
        options,
        families: vec![enumeration, normalization, cdf, product, ratio, moments, median, mode, lemmas],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_families_pass_to_twelve() {
        let report = run_checks(CheckOptions::new(12));
        assert!(report.passed(), "{:?}", report.first_failure());
        assert!(report.families.iter().all(|f| f.checked > 0));
    }

    #[test]
    fn max_one_is_trivial() {
        let report = run_checks(CheckOptions::new(1));
        assert!(report.passed());
        assert_eq!(report.families.iter().find(|f| f.name == "moments").unwrap().checked, 2);
    }

    #[test]
    fn corrupted_pmf_is_caught_with_location() {
        let report = run_checks_with(CheckOptions::new(12), |p, n| {
            let v = exact::pmf(p, n).unwrap();
            if (p.total(), p.good(), n) == (9, 4, 3) {
                v + ExactRational::new(1, 1000)
            } else {
                v
            }
        });
        assert!(!report.passed());
        let (family, ce) = report.first_failure().unwrap();
        assert_eq!(family, "enumeration");
        assert_eq!((ce.total, ce.good, ce.n), (9, 4, Some(3)));
        assert!(ce.to_string().starts_with("N=9 K=4 n=3"));
    }
}
