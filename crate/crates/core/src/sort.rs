//! Instrumented quicksorts.
//!
//! The counters implement the analytical cost model rather than tallying the
//! physical swaps of this particular partition loop. Per dual-pivot stage on a
//! segment of `n` keys with pivot ranks `i < j`:
//!
//! * comparisons: `1 + (i-1) + 2(j-i-1) + 2(n-j)`; one for ordering the pivots,
//!   one per key against the small pivot, one more for every key above it;
//! * exchanges: `(i-1) + (n-j) + 2`; one per key below the small pivot, one per
//!   key above the large pivot, and two pivot placements, always charged;
//! * stages: `1`.
//!
//! Segments of length 0 or 1 are left alone and cost nothing.

use std::ops::{Add, AddAssign, Range};

use crate::error::{Error, Result};
use crate::model::{Algorithm, Metric};
use crate::random::RandomSource;

/// A permutation of `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KeyArray(Vec<u32>);

impl KeyArray {
    pub fn new(keys: Vec<u32>) -> Result<Self> {
        let n = keys.len();
        let mut seen = vec![false; n];
        for &k in &keys {
            let slot = (k as usize).checked_sub(1).filter(|&s| s < n);
            match slot {
                Some(s) if !seen[s] => seen[s] = true,
                _ => return Err(Error::NotAPermutation { n }),
            }
        }
        Ok(Self(keys))
    }

    pub fn ascending(n: usize) -> Self {
        Self((1..=n as u32).collect())
    }

    pub fn descending(n: usize) -> Self {
        Self((1..=n as u32).rev().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }

    pub fn is_sorted(&self) -> bool {
        self.0.windows(2).all(|w| w[0] < w[1])
    }

    /// Sorts with the chosen variant, returning the sorted keys and the tallies.
    pub fn sort_with<R: RandomSource>(
        mut self,
        algorithm: Algorithm,
        rng: &mut R,
    ) -> (KeyArray, CostCounters) {
        let counters = quicksort(algorithm, &mut self.0, rng);
        (self, counters)
    }
}

/// Uniform random permutation of `1..=n` by Fisher–Yates.
pub fn generate_permutation<R: RandomSource>(n: usize, rng: &mut R) -> KeyArray {
    let mut keys: Vec<u32> = (1..=n as u32).collect();
    for top in (1..n).rev() {
        let pick = rng.index(top + 1);
        keys.swap(top, pick);
    }
    KeyArray(keys)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct CostCounters {
    pub comparisons: u64,
    pub exchanges: u64,
    pub stages: u64,
}

impl CostCounters {
    pub fn get(&self, metric: Metric) -> u64 {
        match metric {
            Metric::Comparisons => self.comparisons,
            Metric::Exchanges => self.exchanges,
            Metric::Stages => self.stages,
        }
    }
}

impl AddAssign for CostCounters {
    fn add_assign(&mut self, rhs: Self) {
        self.comparisons += rhs.comparisons;
        self.exchanges += rhs.exchanges;
        self.stages += rhs.stages;
    }
}

impl Add for CostCounters {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

/// Result of one dual-pivot partitioning stage. Ranks are 1-based within the
/// segment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartitionOutcome {
    pub small_pivot_rank: usize,
    pub large_pivot_rank: usize,
    pub left_size: usize,
    pub middle_size: usize,
    pub right_size: usize,
    pub counter_delta: CostCounters,
}

impl PartitionOutcome {
    pub fn segment_len(&self) -> usize {
        self.left_size + self.middle_size + self.right_size + 2
    }

    /// Sub-ranges (relative to the segment) still to be sorted.
    pub fn subsegments(&self) -> [Range<usize>; 3] {
        let middle_start = self.left_size + 1;
        let right_start = middle_start + self.middle_size + 1;
        [
            0..self.left_size,
            middle_start..middle_start + self.middle_size,
            right_start..right_start + self.right_size,
        ]
    }
}

/// Partitions `segment` around two uniformly chosen pivots into
/// `[< p1] p1 [between] p2 [> p2]`, charging the stage's toll to `counters`.
pub fn dual_pivot_partition<T: Ord, R: RandomSource>(
    segment: &mut [T],
    rng: &mut R,
    counters: &mut CostCounters,
) -> Result<PartitionOutcome> {
    let len = segment.len();
    if len < 2 {
        return Err(Error::SegmentTooShort { len });
    }
    let last = len - 1;
    let (first_pick, second_pick) = rng.pair(len);
    // first_pick < second_pick, so the second swap never disturbs the first.
    segment.swap(0, first_pick);
    segment.swap(last, second_pick);

    let mut delta = CostCounters { comparisons: 1, exchanges: 0, stages: 1 };
    if segment[0] > segment[last] {
        segment.swap(0, last);
    }

    // [1, lt): below p1; [lt, k): between; [k, gt): unclassified; [gt, last): above p2.
    let (mut lt, mut k, mut gt) = (1, 1, last);
    while k < gt {
        if segment[k] < segment[0] {
            delta.comparisons += 1;
            delta.exchanges += 1;
            segment.swap(lt, k);
            lt += 1;
            k += 1;
        } else if segment[k] > segment[last] {
            delta.comparisons += 2;
            delta.exchanges += 1;
            gt -= 1;
            segment.swap(k, gt);
        } else {
            delta.comparisons += 2;
            k += 1;
        }
    }

    segment.swap(0, lt - 1);
    segment.swap(last, gt);
    delta.exchanges += 2;

    let left_size = lt - 1;
    let middle_size = gt - lt;
    let right_size = last - gt;
    *counters += delta;
    Ok(PartitionOutcome {
        small_pivot_rank: left_size + 1,
        large_pivot_rank: left_size + middle_size + 2,
        left_size,
        middle_size,
        right_size,
        counter_delta: delta,
    })
}

pub fn dual_pivot_quicksort<T: Ord, R: RandomSource>(keys: &mut [T], rng: &mut R) -> CostCounters {
    dual_pivot_quicksort_observed(keys, rng, |_| {})
}

/// Like [`dual_pivot_quicksort`], calling `observer` after every stage.
pub fn dual_pivot_quicksort_observed<T, R, F>(keys: &mut [T], rng: &mut R, mut observer: F) -> CostCounters
where
    T: Ord,
    R: RandomSource,
    F: FnMut(&PartitionOutcome),
{
    let mut counters = CostCounters::default();
    let mut pending = vec![0..keys.len()];
    while let Some(range) = pending.pop() {
        if range.len() < 2 {
            continue;
        }
        let base = range.start;
        let outcome = dual_pivot_partition(&mut keys[range], rng, &mut counters)
            .expect("segments shorter than 2 are skipped");
        observer(&outcome);
        for sub in outcome.subsegments() {
            if sub.len() >= 2 {
                pending.push(base + sub.start..base + sub.end);
            }
        }
    }
    counters
}

/// Single-pivot quicksort with a uniformly random pivot.
///
/// Each stage on `n` keys charges `n - 1` comparisons and one stage. Exchanges
/// are not modelled for this variant and stay at zero.
pub fn classic_quicksort<T: Ord, R: RandomSource>(keys: &mut [T], rng: &mut R) -> CostCounters {
    let mut counters = CostCounters::default();
    let mut pending = vec![0..keys.len()];
    while let Some(range) = pending.pop() {
        if range.len() < 2 {
            continue;
        }
        let segment = &mut keys[range.clone()];
        let last = segment.len() - 1;
        segment.swap(rng.index(segment.len()), last);
        let mut store = 0;
        for k in 0..last {
            if segment[k] < segment[last] {
                segment.swap(store, k);
                store += 1;
            }
        }
        segment.swap(store, last);
        counters.comparisons += last as u64;
        counters.stages += 1;
        pending.push(range.start..range.start + store);
        pending.push(range.start + store + 1..range.end);
    }
    counters
}

pub fn quicksort<T: Ord, R: RandomSource>(algorithm: Algorithm, keys: &mut [T], rng: &mut R) -> CostCounters {
    match algorithm {
        Algorithm::Dual => dual_pivot_quicksort(keys, rng),
        Algorithm::Classic => classic_quicksort(keys, rng),
    }
}
