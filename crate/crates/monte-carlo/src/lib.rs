//! Empirical side of tie-likelihood analysis: seeded Monte Carlo estimates
//! of "exactly `k` winners" with Wilson intervals, exact rational oracles
//! for small instances, and log-log exponent fits.
//!
//! Trials run data-parallel through rayon with the `parallel` feature (on
//! by default) and sequentially otherwise. Each trial draws from its own
//! stream keyed by `(seed, trial)`, so the two paths give identical results.

mod error;
mod estimate;
mod exact;
mod fit;
mod population;
mod report;

pub use error::McError;
pub use estimate::{count_hits, estimate_tie_probability, sweep, wilson_interval, Execution, SampleEstimate, Z95};
pub use exact::{
    exact_histogram_pmf, exact_tie_probability, histogram_count, multinomial_pmf, pmf_dp, DEFAULT_HISTOGRAM_CAP,
    MAX_PMF_AGENTS, PMF_STATE_CAP,
};
pub use fit::{fit_estimates, fit_exponent, ExponentFit};
pub use population::{sample_histogram, trial_rng, Population, Q};
pub use report::{write_csv, write_gnuplot};
