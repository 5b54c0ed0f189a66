//! The distribution of the number of draws, without replacement, until the
//! first good object comes out of an urn holding `N` objects of which `K`
//! are good.
//!
//! * [`exact`] evaluates every quantity as an exact rational.
//! * [`float`] evaluates the same quantities in `f64` through log-space
//!   binomial ratios, for `N` up to about 10^9.
//! * [`sampler`] draws variates by urn simulation and by cdf inversion.
//! * [`convergence`] measures the distance to the geometric law.
//! * [`oracle`] holds the enumeration and Monte Carlo cross-checks, and
//!   [`check`] runs them as one sweep.

pub mod check;
pub mod convergence;
mod error;
pub mod exact;
pub mod float;
pub mod oracle;
mod params;
mod rational;
pub mod sampler;

pub use error::{Error, Result};
pub use params::UrnParams;
pub use rational::{ExactRational, ParseRationalError};
