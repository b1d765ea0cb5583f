//! Exact cost laws obtained by running the real sorter down every branch of
//! its randomness.
//!
//! Each random draw is treated as a choice among `k` equally likely outcomes
//! (`k = bound` for an index, `k = C(bound, 2)` for a pair). The sorter is
//! replayed once per complete choice sequence, in odometer order, and each
//! leaf is weighted by the product of `1/k` along its path.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::model::{Algorithm, Metric};
use crate::oracle::CostDistribution;
use crate::random::{pair_count, unrank_pair, RandomSource};
use crate::sort::{quicksort, KeyArray};
use crate::Rational;

/// Default ceiling on `n` for exhaustive enumeration.
pub const ENUMERATION_CAP: usize = 7;

/// Replays a prefix of recorded choices, then takes choice 0 for every new
/// draw, remembering each draw's arity.
#[derive(Debug, Default)]
struct ReplaySource {
    script: Vec<usize>,
    trail: Vec<(usize, usize)>,
}

impl ReplaySource {
    fn choose(&mut self, arity: usize) -> usize {
        let pos = self.trail.len();
        let choice = self.script.get(pos).copied().unwrap_or(0);
        debug_assert!(choice < arity, "replayed choice out of range");
        self.trail.push((choice, arity));
        choice
    }

    fn leaf_weight(&self) -> Rational {
        let den: BigInt = self.trail.iter().map(|&(_, arity)| BigInt::from(arity)).product();
        Rational::new(BigInt::one(), den)
    }

    /// Advances to the next choice sequence; `false` once all are exhausted.
    fn advance(&mut self) -> bool {
        while let Some((choice, arity)) = self.trail.pop() {
            if choice + 1 < arity {
                self.script = self.trail.iter().map(|&(c, _)| c).collect();
                self.script.push(choice + 1);
                self.trail.clear();
                return true;
            }
        }
        false
    }
}

impl RandomSource for ReplaySource {
    fn index(&mut self, bound: usize) -> usize {
        self.choose(bound)
    }

    fn pair(&mut self, bound: usize) -> (usize, usize) {
        let rank = self.choose(pair_count(bound));
        unrank_pair(rank, bound)
    }
}

/// Exact law of `metric` for sorting `n` keys, starting from the descending
/// permutation. Refuses `n` above [`ENUMERATION_CAP`].
pub fn enumerate_distribution(
    n: usize,
    algorithm: Algorithm,
    metric: Metric,
) -> Result<CostDistribution<Rational>> {
    if n > ENUMERATION_CAP {
        return Err(Error::SizeCap {
            what: "exhaustive enumeration",
            n,
            cap: ENUMERATION_CAP,
            hint: "",
        });
    }
    enumerate_distribution_from(&KeyArray::descending(n), algorithm, metric)
}

/// Same as [`enumerate_distribution`] for an explicit input permutation. The
/// size cap is not enforced here.
pub fn enumerate_distribution_from(
    input: &KeyArray,
    algorithm: Algorithm,
    metric: Metric,
) -> Result<CostDistribution<Rational>> {
    if !algorithm.measures(metric) {
        return Err(Error::Unsupported { algorithm, metric });
    }
    let mut law: BTreeMap<u64, Rational> = BTreeMap::new();
    let mut source = ReplaySource::default();
    loop {
        let mut keys = input.as_slice().to_vec();
        let counters = quicksort(algorithm, &mut keys, &mut source);
        debug_assert!(keys.windows(2).all(|w| w[0] < w[1]));
        let slot = law.entry(counters.get(metric)).or_insert_with(Rational::zero);
        *slot += source.leaf_weight();
        if !source.advance() {
            break;
        }
    }
    Ok(CostDistribution::from_map(input.len(), metric, law))
}
