//! Seeded Monte Carlo batches over the instrumented sorters.
//!
//! Trial `t` of a plan draws its randomness from
//! [`SeededSource::for_trial(master_seed, t)`](SeededSource::for_trial): the
//! ChaCha8 key expanded from the master seed, stream number `t`. Each trial
//! shuffles `1..=n` with that source and sorts it with the same source.
//! Counters are accumulated as exact integers, so the aggregate does not
//! depend on scheduling and sequential and parallel runs agree bit for bit.

use std::collections::BTreeMap;
use std::ops::Range;

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::model::{Algorithm, Metric};
use crate::oracle::{closed_dual_variance, dp_expected, CostDistribution};
use crate::random::SeededSource;
use crate::scalar::Scalar;
use crate::sort::{generate_permutation, quicksort, CostCounters};
use crate::Rational;

/// Trials per parallel work unit.
const CHUNK: u64 = 1024;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TrialPlan {
    pub algorithm: Algorithm,
    pub n: usize,
    pub trials: u64,
    pub master_seed: u64,
}

impl TrialPlan {
    pub fn new(algorithm: Algorithm, n: usize, trials: u64, master_seed: u64) -> Result<Self> {
        if trials == 0 {
            return Err(Error::InvalidPlan("trials must be at least 1".into()));
        }
        Ok(Self { algorithm, n, trials, master_seed })
    }

    /// Runs trial `t` of this plan.
    pub fn run_one(&self, t: u64) -> CostCounters {
        let mut source = SeededSource::for_trial(self.master_seed, t);
        let mut keys = generate_permutation(self.n, &mut source).into_vec();
        quicksort(self.algorithm, &mut keys, &mut source)
    }
}

/// Exact running sums for one metric.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct MetricSums {
    pub sum: BigUint,
    pub sum_sq: BigUint,
    pub count: u64,
}

impl MetricSums {
    pub fn push(&mut self, value: u64) {
        let v = BigUint::from(value);
        self.sum_sq += &v * &v;
        self.sum += v;
        self.count += 1;
    }

    pub fn merge(&mut self, other: &MetricSums) {
        self.sum += &other.sum;
        self.sum_sq += &other.sum_sq;
        self.count += other.count;
    }

    pub fn mean(&self) -> Rational {
        Rational::new(BigInt::from(self.sum.clone()), BigInt::from(self.count))
    }

    /// Unbiased sample variance, `(k*sum_sq - sum^2) / (k(k-1))`, exact.
    pub fn sample_variance(&self) -> Option<Rational> {
        if self.count < 2 {
            return None;
        }
        let k = BigInt::from(self.count);
        let spread = &k * BigInt::from(self.sum_sq.clone()) - BigInt::from(&self.sum * &self.sum);
        Some(Rational::new(spread, &k * (&k - 1)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TrialAggregate {
    pub plan: TrialPlan,
    pub comparisons: MetricSums,
    pub exchanges: MetricSums,
    pub stages: MetricSums,
}

impl TrialAggregate {
    pub fn empty(plan: TrialPlan) -> Self {
        Self {
            plan,
            comparisons: MetricSums::default(),
            exchanges: MetricSums::default(),
            stages: MetricSums::default(),
        }
    }

    pub fn push(&mut self, counters: &CostCounters) {
        self.comparisons.push(counters.comparisons);
        self.exchanges.push(counters.exchanges);
        self.stages.push(counters.stages);
    }

    pub fn metric(&self, metric: Metric) -> &MetricSums {
        match metric {
            Metric::Comparisons => &self.comparisons,
            Metric::Exchanges => &self.exchanges,
            Metric::Stages => &self.stages,
        }
    }

    pub fn count(&self) -> u64 {
        self.comparisons.count
    }

    pub fn is_complete(&self) -> bool {
        self.count() == self.plan.trials
    }

    /// Combines partial aggregates of the same plan.
    pub fn merge(mut self, other: &TrialAggregate) -> Result<Self> {
        if self.plan != other.plan {
            return Err(Error::PlanMismatch);
        }
        self.comparisons.merge(&other.comparisons);
        self.exchanges.merge(&other.exchanges);
        self.stages.merge(&other.stages);
        Ok(self)
    }
}

/// Aggregate over the trials in `range` only.
pub fn run_trial_range(plan: &TrialPlan, range: Range<u64>) -> TrialAggregate {
    let mut agg = TrialAggregate::empty(*plan);
    for t in range {
        agg.push(&plan.run_one(t));
    }
    agg
}

/// Runs every trial of the plan on the rayon pool.
pub fn run_trials(plan: &TrialPlan) -> TrialAggregate {
    let chunks = plan.trials.div_ceil(CHUNK);
    (0..chunks)
        .into_par_iter()
        .map(|c| run_trial_range(plan, c * CHUNK..((c + 1) * CHUNK).min(plan.trials)))
        .reduce(
            || TrialAggregate::empty(*plan),
            |a, b| a.merge(&b).expect("partials share a plan"),
        )
}

pub fn run_trials_sequential(plan: &TrialPlan) -> TrialAggregate {
    run_trial_range(plan, 0..plan.trials)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonReport {
    pub algorithm: Algorithm,
    pub metric: Metric,
    pub n: usize,
    pub count: u64,
    pub theory_mean: Rational,
    pub empirical_mean: f64,
    pub empirical_variance: f64,
    pub std_error: f64,
    /// `None` when the sample has no spread.
    pub z_score: Option<f64>,
    /// Only known for dual-pivot comparisons.
    pub theory_variance: Option<Rational>,
}

impl ComparisonReport {
    /// Standard error implied by the theoretical variance, when known.
    pub fn theory_std_error(&self) -> Option<f64> {
        self.theory_variance.as_ref().map(|v| (v.approx() / self.count as f64).sqrt())
    }

    /// Allowed deviation of the sample variance, `3 sigma^2 sqrt(2/count)`.
    pub fn variance_tolerance(&self) -> Option<f64> {
        self.theory_variance
            .as_ref()
            .map(|v| 3.0 * v.approx() * (2.0 / self.count as f64).sqrt())
    }

    pub fn variance_within_tolerance(&self) -> Option<bool> {
        let sigma2 = self.theory_variance.as_ref()?.approx();
        Some((self.empirical_variance - sigma2).abs() <= self.variance_tolerance()?)
    }

    /// `|z| <= k`; a zero-spread sample passes only if it sits on the theory.
    pub fn within_sigmas(&self, k: f64) -> bool {
        match self.z_score {
            Some(z) => z.abs() <= k,
            None => (self.empirical_mean - self.theory_mean.approx()).abs() < 1e-9,
        }
    }
}

/// Holds the aggregate's sample statistics for `metric` against the oracle.
pub fn compare(agg: &TrialAggregate, metric: Metric) -> Result<ComparisonReport> {
    let plan = agg.plan;
    if !plan.algorithm.measures(metric) {
        return Err(Error::Unsupported { algorithm: plan.algorithm, metric });
    }
    let sums = agg.metric(metric);
    let variance = sums
        .sample_variance()
        .ok_or(Error::TooFewTrials { need: 2, have: sums.count })?;

    let theory_mean = dp_expected::<Rational>(plan.algorithm, metric, plan.n).values[plan.n].clone();
    let theory_variance = (plan.algorithm == Algorithm::Dual && metric == Metric::Comparisons)
        .then(|| closed_dual_variance::<Rational>(plan.n));

    let empirical_mean = sums.mean().approx();
    let empirical_variance = variance.approx();
    let std_error = (empirical_variance / sums.count as f64).sqrt();
    let z_score = (std_error > 0.0).then(|| (empirical_mean - theory_mean.approx()) / std_error);
    Ok(ComparisonReport {
        algorithm: plan.algorithm,
        metric,
        n: plan.n,
        count: sums.count,
        theory_mean,
        empirical_mean,
        empirical_variance,
        std_error,
        z_score,
        theory_variance,
    })
}

/// Observed frequency of each cost value.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ObservedFrequencies {
    pub counts: BTreeMap<u64, u64>,
    pub total: u64,
}

pub fn empirical_distribution(plan: &TrialPlan, metric: Metric) -> Result<ObservedFrequencies> {
    if !plan.algorithm.measures(metric) {
        return Err(Error::Unsupported { algorithm: plan.algorithm, metric });
    }
    let chunks = plan.trials.div_ceil(CHUNK);
    let merged = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut obs = ObservedFrequencies::default();
            for t in c * CHUNK..((c + 1) * CHUNK).min(plan.trials) {
                *obs.counts.entry(plan.run_one(t).get(metric)).or_default() += 1;
                obs.total += 1;
            }
            obs
        })
        .reduce(ObservedFrequencies::default, |mut a, b| {
            for (k, v) in b.counts {
                *a.counts.entry(k).or_default() += v;
            }
            a.total += b.total;
            a
        });
    Ok(merged)
}

/// Total-variation distance `1/2 sum |observed/total - p|`.
pub fn distribution_distance(observed: &ObservedFrequencies, exact: &CostDistribution<Rational>) -> f64 {
    if observed.total == 0 {
        return 1.0;
    }
    let total = Rational::from_count(observed.total);
    let mut acc = Rational::zero();
    for (&cost, &hits) in &observed.counts {
        let diff = Rational::from_count(hits) / &total - exact.prob(cost);
        acc += if diff < Rational::zero() { -diff } else { diff };
    }
    for (cost, p) in exact.probs() {
        if !observed.counts.contains_key(cost) {
            acc += p;
        }
    }
    (acc / Rational::from_int(2)).to_f64().unwrap_or(f64::NAN)
}
