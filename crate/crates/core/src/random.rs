//! Injectable randomness for the sorters.
//!
//! Sorting code only ever asks for a uniform index or a uniform unordered pair
//! of distinct indices. [`SeededSource`] answers from a ChaCha8 stream; the
//! branching source in [`crate::enumerate`] answers by forking instead.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub trait RandomSource {
    /// Uniform index in `0..bound`. `bound` must be positive.
    fn index(&mut self, bound: usize) -> usize;

    /// Uniform unordered pair `(a, b)` with `a < b < bound`. `bound` must be at
    /// least 2. Every one of the `C(bound, 2)` pairs is equally likely.
    fn pair(&mut self, bound: usize) -> (usize, usize);
}

impl<R: RandomSource + ?Sized> RandomSource for &mut R {
    fn index(&mut self, bound: usize) -> usize {
        (**self).index(bound)
    }

    fn pair(&mut self, bound: usize) -> (usize, usize) {
        (**self).pair(bound)
    }
}

/// Number of unordered pairs of distinct elements of a `k`-element range.
pub fn pair_count(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

/// Maps `rank` in `0..C(bound, 2)` to the pair it names, in lexicographic
/// order: `(0,1), (0,2), .., (0,bound-1), (1,2), ..`.
pub fn unrank_pair(mut rank: usize, bound: usize) -> (usize, usize) {
    for a in 0..bound {
        let after = bound - 1 - a;
        if rank < after {
            return (a, a + 1 + rank);
        }
        rank -= after;
    }
    panic!("pair rank out of range for bound {bound}");
}

/// Deterministic source backed by ChaCha8.
///
/// Indices are drawn as `u64` so the stream does not depend on the platform's
/// pointer width. A pair is drawn as an ordered pair of distinct indices and
/// then sorted, which is uniform over unordered pairs.
#[derive(Debug, Clone)]
pub struct SeededSource {
    rng: ChaCha8Rng,
}

impl SeededSource {
    pub fn new(seed: u64) -> Self {
        Self { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// Source for trial `trial` of a batch seeded with `master_seed`.
    ///
    /// The key is expanded from `master_seed` exactly as in [`Self::new`] and
    /// the trial index selects the ChaCha stream, so every trial reads its own
    /// non-overlapping keystream regardless of scheduling.
    pub fn for_trial(master_seed: u64, trial: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(master_seed);
        rng.set_stream(trial);
        Self { rng }
    }
}

impl RandomSource for SeededSource {
    fn index(&mut self, bound: usize) -> usize {
        assert!(bound > 0, "index bound must be positive");
        self.rng.gen_range(0..bound as u64) as usize
    }

    fn pair(&mut self, bound: usize) -> (usize, usize) {
        assert!(bound >= 2, "pair bound must be at least 2");
        let a = self.index(bound);
        let mut b = self.index(bound - 1);
        if b >= a {
            b += 1;
        }
        (a.min(b), a.max(b))
    }
}
