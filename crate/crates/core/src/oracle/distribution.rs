//! Exact cost laws of dual-pivot quicksort via the distributional recurrence
//!
//! ```text
//! D_n = 1/C(n,2) * sum_{1<=i<j<=n} shift(toll(i,j,n)) D_{i-1} * D_{j-i-1} * D_{n-j}
//! ```
//!
//! where `*` is convolution of independent laws and `D_0 = D_1` is the point
//! mass at 0. Writing `l = i-1`, `m = j-i-1`, `r = n-j`, every toll splits as
//! `a(n, l) + b*r` (comparisons `2n-3-l`, exchanges `l+2` plus `r`, stages `1`).
//! The inner sum over `m + r = s` therefore depends only on `s`, and is cached
//! once per `s` across all `n`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::model::Metric;
use crate::scalar::Scalar;

/// Law of one cost metric at size `n`: cost value -> probability. Only
/// strictly positive masses are stored.
#[derive(Debug, Clone, PartialEq)]
pub struct CostDistribution<T> {
    n: usize,
    metric: Metric,
    probs: BTreeMap<u64, T>,
}

impl<T: Scalar> CostDistribution<T> {
    /// Builds a law from a cost -> mass map, dropping zero entries.
    pub fn from_map(n: usize, metric: Metric, mut probs: BTreeMap<u64, T>) -> Self {
        probs.retain(|_, p| !p.is_zero());
        Self { n, metric, probs }
    }

    fn from_dense(n: usize, metric: Metric, dense: &[T]) -> Self {
        let probs = dense
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_zero())
            .map(|(t, p)| (t as u64, p.clone()))
            .collect();
        Self { n, metric, probs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn metric(&self) -> Metric {
        self.metric
    }

    pub fn probs(&self) -> &BTreeMap<u64, T> {
        &self.probs
    }

    pub fn prob(&self, cost: u64) -> T {
        self.probs.get(&cost).cloned().unwrap_or_else(T::zero)
    }

    pub fn total_mass(&self) -> T {
        self.probs.values().cloned().fold(T::zero(), |a, b| a + b)
    }

    pub fn mean(&self) -> T {
        self.moment(|t| T::from_count(t))
    }

    /// `E[X(X-1)]`, the second derivative of the generating function at 1.
    pub fn factorial_moment(&self) -> T {
        self.moment(|t| T::from_count(t * t.saturating_sub(1)))
    }

    pub fn variance(&self) -> T {
        let mean = self.mean();
        self.factorial_moment() + mean.clone() - mean.clone() * mean
    }

    fn moment(&self, weight: impl Fn(u64) -> T) -> T {
        self.probs
            .iter()
            .fold(T::zero(), |acc, (&t, p)| acc + weight(t) * p.clone())
    }
}

pub fn mean_of<T: Scalar>(dist: &CostDistribution<T>) -> T {
    dist.mean()
}

pub fn variance_of<T: Scalar>(dist: &CostDistribution<T>) -> T {
    dist.variance()
}

/// Laws `D_0..=D_{n_max}` of `metric`, with the scalar type's default cap.
pub fn cost_distribution<T: Scalar>(metric: Metric, n_max: usize) -> Result<Vec<CostDistribution<T>>> {
    cost_distribution_capped(metric, n_max, T::DISTRIBUTION_CAP)
}

pub fn cost_distribution_capped<T: Scalar>(
    metric: Metric,
    n_max: usize,
    cap: usize,
) -> Result<Vec<CostDistribution<T>>> {
    if n_max > cap {
        return Err(Error::SizeCap {
            what: "cost distributions",
            n: n_max,
            cap,
            hint: if T::EXACT { "; use float mode for larger sizes" } else { "" },
        });
    }
    let point = vec![T::one()];
    let mut laws: Vec<Vec<T>> = vec![point.clone(), point];
    laws.truncate(n_max + 1);
    // pairs[s] = sum over m + r = s of D_m * shift(right_step * r) D_r
    let mut pairs: Vec<Vec<T>> = Vec::new();
    let right_step = usize::from(metric == Metric::Exchanges);

    for n in 2..=n_max {
        let s = n - 2;
        debug_assert_eq!(pairs.len(), s);
        let mut inner = Vec::new();
        for r in 0..=s {
            let right = shifted(&laws[r], right_step * r);
            add_into(&mut inner, &convolve(&laws[s - r], &right));
        }
        pairs.push(inner);

        let mut law = Vec::new();
        for l in 0..=n - 2 {
            let toll = match metric {
                Metric::Comparisons => 2 * n - 3 - l,
                Metric::Exchanges => l + 2,
                Metric::Stages => 1,
            };
            let term = shifted(&convolve(&laws[l], &pairs[n - 2 - l]), toll);
            add_into(&mut law, &term);
        }
        let norm = T::from_count((n * (n - 1) / 2) as u64);
        for p in &mut law {
            *p = p.clone() / norm.clone();
        }
        laws.push(law);
    }

    Ok(laws
        .iter()
        .enumerate()
        .map(|(n, law)| CostDistribution::from_dense(n, metric, law))
        .collect())
}

fn convolve<T: Scalar>(a: &[T], b: &[T]) -> Vec<T> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![T::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
            out[i + j] = out[i + j].clone() + x.clone() * y.clone();
        }
    }
    out
}

fn shifted<T: Scalar>(a: &[T], by: usize) -> Vec<T> {
    let mut out = vec![T::zero(); by];
    out.extend_from_slice(a);
    out
}

fn add_into<T: Scalar>(acc: &mut Vec<T>, term: &[T]) {
    if acc.len() < term.len() {
        acc.resize(term.len(), T::zero());
    }
    for (slot, x) in acc.iter_mut().zip(term) {
        if !x.is_zero() {
            *slot = slot.clone() + x.clone();
        }
    }
}
