//! Variate generation by two independent routes: simulating the urn draw
//! by draw, and inverting the floating-point cdf.
//!
//! The generator is xoshiro256++ seeded through SplitMix64, so a given
//! seed yields the same stream on every platform. Parallel workers take
//! [`SamplerState::stream`]`(seed, i)`: worker `i` starts `i` jumps
//! (2^128 steps each) into the base stream, so streams never overlap.

use rand::{Rng, RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

use crate::float::cdf_float;
use crate::params::UrnParams;

/// Seeded generator state. Single owner; move it between threads rather
/// than sharing it.
#[derive(Debug, Clone)]
pub struct SamplerState {
    seed: u64,
    rng: Xoshiro256PlusPlus,
}

impl SamplerState {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            rng: Xoshiro256PlusPlus::seed_from_u64(seed),
        }
    }

    /// Independent stream `index` derived from `seed`.
    pub fn stream(seed: u64, index: u64) -> Self {
        let mut state = Self::new(seed);
        for _ in 0..index {
            state.rng.jump();
        }
        state
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    /// Uniform on `[0, 1)` with 53 random bits.
    pub fn next_unit(&mut self) -> f64 {
        (self.rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform integer in `[0, bound)`.
    pub fn below(&mut self, bound: u64) -> u64 {
        self.rng.random_range(0..bound)
    }
}

/// Draws one object at a time; after `k - 1` bad draws the next draw is
/// good with probability `K / (N - k + 1)`. Exact integer comparison, no
/// floating point.
pub fn sample_urn_walk(params: &UrnParams, state: &mut SamplerState) -> u64 {
    let good = params.good();
    let mut left = params.total();
    let mut draw = 1;
    while state.below(left) >= good {
        left -= 1;
        draw += 1;
    }
    draw
}

/// Smallest `n` with `cdf_float(n) > u`, scanning up from 1.
pub fn inverse_cdf_at(params: &UrnParams, u: f64) -> u64 {
    let last = params.max_draws();
    let mut n = 1;
    while n < last && cdf_float(params, n) <= u {
        n += 1;
    }
    n
}

/// Inversion sampling: one uniform draw, then [`inverse_cdf_at`].
pub fn sample_inverse_cdf(params: &UrnParams, state: &mut SamplerState) -> u64 {
    inverse_cdf_at(params, state.next_unit())
}

/// Precomputed `cdf_float(1..N-K)` for repeated inversion from one urn.
/// Gives the same answers as [`inverse_cdf_at`] with a binary search.
#[derive(Debug, Clone)]
pub struct InverseCdfTable {
    params: UrnParams,
    cdf: Vec<f64>,
}

impl InverseCdfTable {
    pub fn new(params: UrnParams) -> Self {
        let cdf = (1..params.max_draws()).map(|n| cdf_float(&params, n)).collect();
        Self { params, cdf }
    }

    pub fn params(&self) -> &UrnParams {
        &self.params
    }

    pub fn quantile(&self, u: f64) -> u64 {
        self.cdf.partition_point(|&c| c <= u) as u64 + 1
    }

    pub fn sample(&self, state: &mut SamplerState) -> u64 {
        self.quantile(state.next_unit())
    }
}
