//! Expected costs by direct evaluation of the divide-and-conquer recurrences.
//!
//! Dual pivot, with `t(n)` the mean stage toll over the `C(n,2)` pivot pairs:
//!
//! ```text
//! E_n = t(n) + 6/(n(n-1)) * sum_{i=1}^{n-1} (n-i) E_{i-1},   n >= 2,  E_0 = E_1 = 0
//! ```
//!
//! Classic:
//!
//! ```text
//! E_n = t(n) + (2/n) * sum_{k=0}^{n-1} E_k,   n >= 2
//! ```
//!
//! Both weighted sums are carried incrementally, so a table costs `O(n_max)`
//! scalar operations.

use crate::model::{Algorithm, Metric};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub struct ExpectationTable<T> {
    pub algorithm: Algorithm,
    pub metric: Metric,
    pub values: Vec<T>,
}

impl<T> ExpectationTable<T> {
    pub fn get(&self, n: usize) -> Option<&T> {
        self.values.get(n)
    }

    pub fn n_max(&self) -> usize {
        self.values.len() - 1
    }
}

impl<T> std::ops::Index<usize> for ExpectationTable<T> {
    type Output = T;

    fn index(&self, n: usize) -> &T {
        &self.values[n]
    }
}

/// Average toll of one stage on `n >= 2` keys.
///
/// Dual pivot: `(5n-7)/3` comparisons, `2(n+1)/3` exchanges, one stage.
/// Classic: `n-1` comparisons, `n/6 + 5/(6n)` exchanges, one stage.
pub fn mean_toll<T: Scalar>(algorithm: Algorithm, metric: Metric, n: usize) -> T {
    let n = n as i64;
    match (algorithm, metric) {
        (Algorithm::Dual, Metric::Comparisons) => T::from_ratio(5 * n - 7, 3),
        (Algorithm::Dual, Metric::Exchanges) => T::from_ratio(2 * (n + 1), 3),
        (Algorithm::Classic, Metric::Comparisons) => T::from_int(n - 1),
        (Algorithm::Classic, Metric::Exchanges) => T::from_ratio(n, 6) + T::from_ratio(5, 6 * n),
        (_, Metric::Stages) => T::one(),
    }
}

/// `(E_0, E_1)` used for classic exchanges.
///
/// `E_1 = 1/6` is the value of the closed form at one key. The recurrence at
/// `n = 2` only sees `E_0 + E_1`, and matching the closed form there forces
/// `E_0 + E_1 = -1/4`, hence `E_0 = -5/12`. With `E_0 = 0` every later entry
/// would be off by `5(n+1)/36`.
pub fn classic_exchange_initial<T: Scalar>() -> (T, T) {
    (T::from_ratio(-5, 12), T::from_ratio(1, 6))
}

pub fn dp_expected<T: Scalar>(algorithm: Algorithm, metric: Metric, n_max: usize) -> ExpectationTable<T> {
    let values = match algorithm {
        Algorithm::Dual => dual_table(metric, n_max),
        Algorithm::Classic => {
            let (e0, e1) = match metric {
                Metric::Exchanges => classic_exchange_initial(),
                _ => (T::zero(), T::zero()),
            };
            classic_table(metric, e0, e1, n_max)
        }
    };
    ExpectationTable { algorithm, metric, values }
}

/// Classic exchange table under caller-chosen initial conditions.
pub fn dp_classic_exchanges_with<T: Scalar>(e0: T, e1: T, n_max: usize) -> ExpectationTable<T> {
    ExpectationTable {
        algorithm: Algorithm::Classic,
        metric: Metric::Exchanges,
        values: classic_table(Metric::Exchanges, e0, e1, n_max),
    }
}

fn dual_table<T: Scalar>(metric: Metric, n_max: usize) -> Vec<T> {
    let mut values = vec![T::zero(); (n_max + 1).min(2)];
    // Over k = 0..=n-2: plain sum and index-weighted sum of E_k, so that
    // sum_{i=1}^{n-1} (n-i) E_{i-1} = (n-1) * plain - weighted.
    let mut plain = T::zero();
    let mut weighted = T::zero();
    for n in 2..=n_max {
        let k = n - 2;
        plain = plain + values[k].clone();
        weighted = weighted + T::from_count(k as u64) * values[k].clone();
        let spread = T::from_count(n as u64 - 1) * plain.clone() - weighted.clone();
        let scale = T::from_ratio(6, (n * (n - 1)) as i64);
        values.push(mean_toll::<T>(Algorithm::Dual, metric, n) + scale * spread);
    }
    values
}

fn classic_table<T: Scalar>(metric: Metric, e0: T, e1: T, n_max: usize) -> Vec<T> {
    let mut values = vec![e0, e1];
    values.truncate(n_max + 1);
    let mut prefix: T = values.iter().cloned().fold(T::zero(), |a, b| a + b);
    for n in 2..=n_max {
        let next = mean_toll::<T>(Algorithm::Classic, metric, n) + T::from_ratio(2, n as i64) * prefix.clone();
        prefix = prefix + next.clone();
        values.push(next);
    }
    values
}
