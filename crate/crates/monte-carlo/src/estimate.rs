//! Tie-probability estimates with Wilson score intervals.

use crate::population::{trial_rng, Population};
use crate::McError;
use preference_core::Histogram;
use serde::Serialize;
use voting_rules::RuleId;

/// Two-sided 95% standard-normal quantile.
pub const Z95: f64 = 1.959_963_984_540_054;

/// How trials are scheduled. Results never depend on the choice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    /// One thread, trials in order.
    Sequential,
    /// Data-parallel over trials on `workers` threads (`None`: rayon's
    /// default pool). Runs sequentially when built without `parallel`.
    #[default]
    Parallel,
    /// Data-parallel on a dedicated pool of the given size.
    Workers(usize),
}

/// Wilson score interval for `hits` successes in `trials`.
pub fn wilson_interval(hits: u64, trials: u64, z: f64) -> (f64, f64) {
    if trials == 0 {
        return (0.0, 1.0);
    }
    let n = trials as f64;
    let p = hits as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = z * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt() / denom;
    let lo = if hits == 0 { 0.0 } else { (center - half).clamp(0.0, p) };
    let hi = if hits == trials { 1.0 } else { (center + half).clamp(p, 1.0) };
    (lo, hi)
}

/// A Monte Carlo estimate of one probability.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SampleEstimate {
    /// Number of agents.
    pub n: u64,
    /// Number of sampled profiles.
    pub trials: u64,
    /// Profiles with exactly `k` winners.
    pub hits: u64,
    /// `hits / trials`.
    pub p_hat: f64,
    /// Wilson 95% lower bound.
    pub lo: f64,
    /// Wilson 95% upper bound.
    pub hi: f64,
    /// Base seed of the trial streams.
    #[serde(skip)]
    pub seed: u64,
}

impl SampleEstimate {
    /// Builds the estimate and its Wilson interval from a hit count.
    pub fn from_hits(n: u64, trials: u64, hits: u64, seed: u64) -> Self {
        let (lo, hi) = wilson_interval(hits, trials, Z95);
        SampleEstimate {
            n,
            trials,
            hits,
            p_hat: if trials == 0 { 0.0 } else { hits as f64 / trials as f64 },
            lo,
            hi,
            seed,
        }
    }

    /// Binomial standard error of `p_hat`.
    pub fn std_error(&self) -> f64 {
        (self.p_hat * (1.0 - self.p_hat) / self.trials as f64).sqrt()
    }
}

/// Counts trials `0..trials` for which `hit(trial)` holds.
pub fn count_hits<F>(trials: u64, exec: Execution, hit: F) -> Result<u64, McError>
where
    F: Fn(u64) -> Result<bool, McError> + Sync + Send,
{
    let sequential = || -> Result<u64, McError> {
        let mut hits = 0;
        for t in 0..trials {
            hits += u64::from(hit(t)?);
        }
        Ok(hits)
    };
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        let parallel = || -> Result<u64, McError> {
            (0..trials)
                .into_par_iter()
                .map(|t| hit(t).map(u64::from))
                .try_reduce(|| 0, |a, b| Ok(a + b))
        };
        match exec {
            Execution::Sequential => sequential(),
            Execution::Parallel => parallel(),
            Execution::Workers(w) => rayon::ThreadPoolBuilder::new()
                .num_threads(w.max(1))
                .build()
                .map_err(|e| McError::InvalidRequest(format!("worker pool: {e}")))?
                .install(parallel),
        }
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = exec;
        sequential()
    }
}

/// Fraction of sampled `n`-profiles with exactly `k` winners.
#[allow(clippy::too_many_arguments)]
pub fn estimate_tie_probability(
    rule: &RuleId,
    population: &Population,
    m: usize,
    k: usize,
    n: u64,
    trials: u64,
    seed: u64,
    exec: Execution,
) -> Result<SampleEstimate, McError> {
    if trials == 0 {
        return Err(McError::InvalidRequest("trials must be positive".into()));
    }
    if n == 0 {
        return Err(McError::InvalidRequest("n must be at least 1".into()));
    }
    population.check_n(n)?;
    // Surface rule/size errors once, before spawning work.
    rule.winners(&Histogram::uniform(m)?.tally())?;
    let hits = count_hits(trials, exec, |t| {
        let counts = population.sample_counts(n, &mut trial_rng(seed, t));
        let h = Histogram::new(m, counts)?;
        Ok(rule.winners(&h.tally())?.len() == k)
    })?;
    Ok(SampleEstimate::from_hits(n, trials, hits, seed))
}

/// One estimate per `n`; trial streams restart at the same seed for every `n`.
#[allow(clippy::too_many_arguments)]
pub fn sweep(
    rule: &RuleId,
    population: &Population,
    m: usize,
    k: usize,
    ns: &[u64],
    trials: u64,
    seed: u64,
    exec: Execution,
) -> Result<Vec<SampleEstimate>, McError> {
    ns.iter()
        .map(|&n| estimate_tie_probability(rule, population, m, k, n, trials, seed, exec))
        .collect()
}
