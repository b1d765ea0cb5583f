use crate::scalar::Scalar;

/// `H_n = 1 + 1/2 + .. + 1/n`, with `H_0 = 0`.
pub fn harmonic<T: Scalar>(n: usize) -> T {
    (1..=n as u64).fold(T::zero(), |acc, k| acc.add_reciprocal(k))
}

/// Second-order harmonic number `1 + 1/4 + .. + 1/n^2`.
pub fn harmonic2<T: Scalar>(n: usize) -> T {
    (1..=n as u64).fold(T::zero(), |acc, k| acc.add_reciprocal(k * k))
}

/// `H_k` and `H_k^(2)` for `k = 0..=n`, each column grown on demand.
#[derive(Debug, Clone)]
pub struct HarmonicTable<T> {
    h: Vec<T>,
    h2: Vec<T>,
}

impl<T: Scalar> HarmonicTable<T> {
    /// Table with both columns filled up to `n_max`.
    pub fn new(n_max: usize) -> Self {
        let mut table = Self::empty();
        table.extend_to(n_max);
        table
    }

    pub fn empty() -> Self {
        Self { h: vec![T::zero()], h2: vec![T::zero()] }
    }

    pub fn extend_to(&mut self, n_max: usize) {
        self.extend_h(n_max);
        self.extend_h2(n_max);
    }

    pub fn extend_h(&mut self, n_max: usize) {
        for k in self.h.len()..=n_max {
            let next = self.h[k - 1].clone().add_reciprocal(k as u64);
            self.h.push(next);
        }
    }

    pub fn extend_h2(&mut self, n_max: usize) {
        for k in self.h2.len()..=n_max {
            let next = self.h2[k - 1].clone().add_reciprocal((k * k) as u64);
            self.h2.push(next);
        }
    }

    /// Panics if `H_n` has not been computed yet.
    pub fn h(&self, n: usize) -> &T {
        &self.h[n]
    }

    /// Panics if `H2_n` has not been computed yet.
    pub fn h2(&self, n: usize) -> &T {
        &self.h2[n]
    }
}
