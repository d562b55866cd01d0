//! Trajectory simulation.
//!
//! Each trial owns its generator: ChaCha8 seeded with the run seed, with the
//! stream set to the trial index. Results therefore do not depend on how
//! trials are scheduled across threads.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::ToPrimitive;
use rand::distr::Distribution;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::weighted::WeightedAliasIndex;

use crate::error::{Error, Result};
use crate::group::SignedPermutation;
use crate::walk::{StepMeasure, WalkSpec};

/// Summation by recursive halving, so the rounding error grows with the log of
/// the length and the result depends only on the order of `xs`.
pub fn pairwise_sum(xs: &[f64]) -> f64 {
    if xs.len() <= 8 {
        return xs.iter().sum();
    }
    let (l, r) = xs.split_at(xs.len() / 2);
    pairwise_sum(l) + pairwise_sum(r)
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimConfig {
    pub spec: WalkSpec,
    pub k: usize,
    pub trials: u64,
    pub seed: u64,
}

impl SimConfig {
    pub fn new(spec: WalkSpec, k: usize, trials: u64, seed: u64) -> Result<Self> {
        if trials == 0 {
            return Err(Error::InvalidParameter { name: "trials", reason: "need at least one trial".into() });
        }
        Ok(Self { spec, k, trials, seed })
    }
}

/// The generator for one trial.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Alias table over the support of a step measure.
#[derive(Debug, Clone)]
pub struct Sampler {
    elements: Vec<SignedPermutation>,
    alias: WeightedAliasIndex<u64>,
}

impl Sampler {
    pub fn new(measure: &StepMeasure) -> Result<Self> {
        let (_, weights) = measure.integer_weights();
        let weights = weights
            .iter()
            .map(|w| w.to_u64().ok_or(Error::Overflow("step weight")))
            .collect::<Result<Vec<_>>>()?;
        let alias = WeightedAliasIndex::new(weights)
            .map_err(|e| Error::InvalidParameter { name: "measure", reason: alloc::format!("{e}") })?;
        Ok(Self { elements: measure.support().iter().map(|(s, _)| s.clone()).collect(), alias })
    }

    pub fn for_spec(spec: &WalkSpec) -> Result<Self> {
        Self::new(&spec.step_measure())
    }

    pub fn elements(&self) -> &[SignedPermutation] {
        &self.elements
    }

    /// Index into [`Sampler::elements`].
    pub fn sample_index<R: Rng + ?Sized>(&self, rng: &mut R) -> usize {
        self.alias.sample(rng)
    }

    pub fn sample_step<R: Rng + ?Sized>(&self, rng: &mut R) -> &SignedPermutation {
        &self.elements[self.sample_index(rng)]
    }

    /// Runs `k` steps from the identity, calling `visit(step, state)` after each.
    pub fn walk<R: Rng + ?Sized>(&self, n: usize, k: usize, rng: &mut R, mut visit: impl FnMut(usize, &SignedPermutation)) -> SignedPermutation {
        let mut x = SignedPermutation::identity(n);
        let mut scratch = x.clone();
        for step in 1..=k {
            x.compose_into(self.sample_step(rng), &mut scratch);
            core::mem::swap(&mut x, &mut scratch);
            visit(step, &x);
        }
        x
    }
}

pub fn sample_step<R: Rng + ?Sized>(spec: &WalkSpec, rng: &mut R) -> Result<SignedPermutation> {
    Ok(Sampler::for_spec(spec)?.sample_step(rng).clone())
}

/// Final state of trial `trial`.
pub fn run_trajectory(config: &SimConfig, trial: u64) -> Result<SignedPermutation> {
    let sampler = Sampler::for_spec(&config.spec)?;
    let mut rng = trial_rng(config.seed, trial);
    Ok(sampler.walk(config.spec.n(), config.k, &mut rng, |_, _| {}))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub mean: f64,
    pub stderr: f64,
    pub trials: u64,
}

impl Estimate {
    pub fn from_samples(xs: &[f64]) -> Self {
        let t = xs.len() as f64;
        let mean = pairwise_sum(xs) / t;
        let stderr = if xs.len() < 2 {
            0.0
        } else {
            let dev: Vec<f64> = xs.iter().map(|x| (x - mean) * (x - mean)).collect();
            libm::sqrt(pairwise_sum(&dev) / (t - 1.0) / t)
        };
        Self { mean, stderr, trials: xs.len() as u64 }
    }
}

fn per_trial<T: Send, F: Fn(u64) -> T + Sync + Send>(trials: u64, f: F) -> Vec<T> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (0..trials).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..trials).map(f).collect()
    }
}

/// Mean and standard error of the fixed-point count of `|x_k|`.
pub fn estimate_fixed_point_mean(config: &SimConfig) -> Result<Estimate> {
    let curve = fixed_point_curve(config, &[config.k])?;
    Ok(curve[0].1)
}

/// Fixed-point estimates at each requested step count, all read off the same
/// trajectories of length `max(ks)`.
pub fn fixed_point_curve(config: &SimConfig, ks: &[usize]) -> Result<Vec<(usize, Estimate)>> {
    if config.trials == 0 {
        return Err(Error::InvalidParameter { name: "trials", reason: "need at least one trial".into() });
    }
    let sampler = Sampler::for_spec(&config.spec)?;
    let n = config.spec.n();
    let k_max = ks.iter().copied().max().unwrap_or(0);
    let mut wanted = vec![usize::MAX; k_max + 1];
    for (i, &k) in ks.iter().enumerate() {
        if wanted[k] == usize::MAX {
            wanted[k] = i;
        }
    }
    let rows: Vec<Vec<f64>> = per_trial(config.trials, |trial| {
        let mut out = vec![0.0; ks.len()];
        if wanted[0] != usize::MAX {
            out[wanted[0]] = n as f64;
        }
        let mut rng = trial_rng(config.seed, trial);
        sampler.walk(n, k_max, &mut rng, |step, x| {
            if wanted[step] != usize::MAX {
                out[wanted[step]] = x.projected_fixed_points() as f64;
            }
        });
        out
    });
    Ok(ks
        .iter()
        .map(|&k| {
            let column: Vec<f64> = rows.iter().map(|r| r[wanted[k]]).collect();
            (k, Estimate::from_samples(&column))
        })
        .collect())
}

/// Empirical counts of `x_k` by group rank.
pub fn empirical_counts(config: &SimConfig) -> Result<Vec<u64>> {
    let group = config.spec.group();
    let size = group.order()? as usize;
    let sampler = Sampler::for_spec(&config.spec)?;
    let ranks: Vec<Result<u64>> = per_trial(config.trials, |trial| {
        let mut rng = trial_rng(config.seed, trial);
        group.rank(&sampler.walk(config.spec.n(), config.k, &mut rng, |_, _| {}))
    });
    let mut counts = vec![0u64; size];
    for r in ranks {
        counts[r? as usize] += 1;
    }
    Ok(counts)
}
