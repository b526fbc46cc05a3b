//! Who draws which ranking: i.i.d. or per-agent categorical distributions,
//! sampled from counter-keyed random streams.

use crate::McError;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use preference_core::{factorial, Histogram};
use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::Binomial;

/// Rational probability.
pub type Q = BigRational;

/// The random stream of trial `trial` under `seed`.
///
/// Streams are addressed by `(seed, trial)` rather than drawn in sequence,
/// so the split of trials across workers never changes any sample.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

fn validate(m: usize, pi: &[Q]) -> Result<(), McError> {
    let q = factorial(m) as usize;
    if pi.len() != q {
        return Err(McError::InvalidDistribution(format!("expected {q} entries for m={m}, found {}", pi.len())));
    }
    if pi.iter().any(Signed::is_negative) {
        return Err(McError::InvalidDistribution("negative entry".into()));
    }
    let total: Q = pi.iter().sum();
    if !total.is_one() {
        return Err(McError::InvalidDistribution(format!("entries sum to {total}")));
    }
    Ok(())
}

fn to_f64(pi: &[Q]) -> Vec<f64> {
    pi.iter().map(|p| p.to_f64().unwrap_or(0.0)).collect()
}

/// Distribution of the agents' rankings over the canonical ranking order.
#[derive(Debug, Clone)]
pub enum Population {
    /// Every agent draws from the same distribution.
    Iid {
        /// Exact distribution.
        pi: Vec<Q>,
        /// Floating-point copy used for sampling.
        weights: Vec<f64>,
    },
    /// Agent `j` draws from `pis[j]`; the number of agents is fixed.
    PerAgent {
        /// Exact distributions, one per agent.
        pis: Vec<Vec<Q>>,
        /// One categorical sampler per agent.
        samplers: Vec<WeightedIndex<f64>>,
    },
}

impl Population {
    /// Impartial culture: uniform over all `m!` rankings.
    pub fn impartial(m: usize) -> Result<Self, McError> {
        let q = preference_core::ranking_table(m)?.len();
        Population::iid(m, vec![Q::new(1.into(), (q as i64).into()); q])
    }

    /// I.i.d. agents with distribution `pi`.
    pub fn iid(m: usize, pi: Vec<Q>) -> Result<Self, McError> {
        validate(m, &pi)?;
        let weights = to_f64(&pi);
        Ok(Population::Iid { pi, weights })
    }

    /// Independent, non-identical agents.
    pub fn per_agent(m: usize, pis: Vec<Vec<Q>>) -> Result<Self, McError> {
        let mut samplers = Vec::with_capacity(pis.len());
        for pi in &pis {
            validate(m, pi)?;
            samplers.push(
                WeightedIndex::new(to_f64(pi)).map_err(|e| McError::InvalidDistribution(e.to_string()))?,
            );
        }
        Ok(Population::PerAgent { pis, samplers })
    }

    /// Number of categories `m!`.
    pub fn q(&self) -> usize {
        match self {
            Population::Iid { pi, .. } => pi.len(),
            Population::PerAgent { pis, .. } => pis.first().map_or(0, Vec::len),
        }
    }

    /// The fixed number of agents of a per-agent population.
    pub fn fixed_n(&self) -> Option<u64> {
        match self {
            Population::Iid { .. } => None,
            Population::PerAgent { pis, .. } => Some(pis.len() as u64),
        }
    }

    /// Checks that `n` agents can be drawn.
    pub fn check_n(&self, n: u64) -> Result<(), McError> {
        match self.fixed_n() {
            Some(k) if k != n => Err(McError::InvalidRequest(format!("population has {k} agents, asked for {n}"))),
            _ => Ok(()),
        }
    }

    /// Counts of one `n`-agent draw.
    ///
    /// I.i.d. draws are taken as one multinomial vector through conditional
    /// binomials (cost independent of `n`); per-agent draws sample each
    /// agent's ranking in turn.
    pub fn sample_counts(&self, n: u64, rng: &mut ChaCha8Rng) -> Vec<u64> {
        match self {
            Population::Iid { weights, .. } => {
                let mut counts = vec![0u64; weights.len()];
                let mut left = n;
                let mut mass = 1.0f64;
                for (j, &w) in weights.iter().enumerate() {
                    if left == 0 {
                        break;
                    }
                    if j + 1 == weights.len() || mass <= w {
                        counts[j] = left;
                        break;
                    }
                    let p = (w / mass).clamp(0.0, 1.0);
                    let c = Binomial::new(left, p).expect("p in [0, 1]").sample(rng);
                    counts[j] = c;
                    left -= c;
                    mass -= w;
                }
                counts
            }
            Population::PerAgent { samplers, .. } => {
                let mut counts = vec![0u64; self.q()];
                for s in samplers {
                    counts[s.sample(rng)] += 1;
                }
                counts
            }
        }
    }
}

/// Histogram of independent categorical draws, one per distribution in
/// `pis`, from the stream `(seed, index)`.
pub fn sample_histogram(m: usize, pis: &[Vec<Q>], seed: u64, index: u64) -> Result<Histogram, McError> {
    let pop = Population::per_agent(m, pis.to_vec())?;
    let counts = pop.sample_counts(pis.len() as u64, &mut trial_rng(seed, index));
    Ok(Histogram::new(m, counts)?)
}
