//! The exact cross-check suite behind `dpqs verify`.
//!
//! Each check compares two independently computed sequences of rationals and
//! reports the first mismatch, if any.

use std::fmt;

use crate::enumerate::{enumerate_distribution, ENUMERATION_CAP};
use crate::model::{Algorithm, Metric};
use crate::oracle::{cost_distribution_capped, dp_expected, mean_toll, ClosedForms, HarmonicTable};
use crate::scalar::Scalar;
use crate::Rational;

#[derive(Debug, Clone, PartialEq)]
pub struct Mismatch {
    pub n: usize,
    pub expected: String,
    pub got: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub name: String,
    pub range: (usize, usize),
    pub mismatch: Option<Mismatch>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (lo, hi) = self.range;
        match &self.mismatch {
            None => write!(f, "PASS  {:<52} n={lo}..={hi}", self.name),
            Some(m) => write!(
                f,
                "FAIL  {:<52} n={} expected={} got={}",
                self.name, m.n, m.expected, m.got
            ),
        }
    }
}

/// Compares `expected(n)` with `got(n)` for every `n` in `lo..=hi`, stopping
/// at the first difference.
pub fn check_sequence<T, E, G>(name: impl Into<String>, lo: usize, hi: usize, mut expected: E, mut got: G) -> CheckResult
where
    T: PartialEq + fmt::Display,
    E: FnMut(usize) -> T,
    G: FnMut(usize) -> T,
{
    let mismatch = (lo..=hi).find_map(|n| {
        let (e, g) = (expected(n), got(n));
        (e != g).then(|| Mismatch { n, expected: e.to_string(), got: g.to_string() })
    });
    CheckResult { name: name.into(), range: (lo, hi), mismatch }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    /// Upper end of the closed-form/recurrence sweeps; at least 4.
    pub n_max: usize,
    /// Upper end of the distribution checks.
    pub dist_cap: usize,
    /// Upper end of the implementation/model equivalence checks.
    pub enum_cap: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self { n_max: 20, dist_cap: 12, enum_cap: ENUMERATION_CAP }
    }
}

pub fn run_suite(config: VerifyConfig) -> Vec<CheckResult> {
    let n_max = config.n_max;
    let mut closed = ClosedForms::<Rational>::new(n_max);
    let mut results = Vec::new();

    let dual = |metric| dp_expected::<Rational>(Algorithm::Dual, metric, n_max);
    let classic = |metric| dp_expected::<Rational>(Algorithm::Classic, metric, n_max);

    let dc = dual(Metric::Comparisons);
    results.push(check_sequence("dual comparisons: recurrence = closed form", 0, n_max, |n| {
        closed.dual_comparisons(n)
    }, |n| dc[n].clone()));
    let dx = dual(Metric::Exchanges);
    results.push(check_sequence("dual exchanges: recurrence = closed form", 4, n_max, |n| {
        closed.dual_exchanges(n).expect("n >= 4")
    }, |n| dx[n].clone()));
    let ds = dual(Metric::Stages);
    results.push(check_sequence("dual stages: recurrence = closed form", 4, n_max, |n| {
        closed.dual_stages(n).expect("n >= 4")
    }, |n| ds[n].clone()));
    let cc = classic(Metric::Comparisons);
    results.push(check_sequence("classic comparisons: recurrence = closed form", 0, n_max, |n| {
        closed.classic_comparisons(n)
    }, |n| cc[n].clone()));
    let cx = classic(Metric::Exchanges);
    results.push(check_sequence("classic exchanges: recurrence = closed form", 1, n_max, |n| {
        closed.classic_exchanges(n)
    }, |n| cx[n].clone()));

    let mut other = ClosedForms::<Rational>::new(n_max);
    results.push(check_sequence("dual comparisons = classic comparisons", 0, n_max, |n| {
        closed.dual_comparisons(n)
    }, |n| other.classic_comparisons(n)));

    results.push(check_sequence("mean comparison toll = (5n-7)/3", 2, n_max.max(50), |n| {
        mean_toll::<Rational>(Algorithm::Dual, Metric::Comparisons, n)
    }, |n| pair_average(n, |i, _| 2 * n - i - 2)));
    results.push(check_sequence("mean exchange toll = 2(n+1)/3", 2, n_max.max(50), |n| {
        mean_toll::<Rational>(Algorithm::Dual, Metric::Exchanges, n)
    }, |n| pair_average(n, |i, j| (i - 1) + (n - j) + 2)));

    let harmonics = HarmonicTable::<Rational>::new(n_max.max(100) + 1);
    results.push(check_sequence("H_{n+1}^2 - H2_{n+1} step identity", 0, n_max.max(100), |n| {
        let (h, h2) = (harmonics.h(n + 1), harmonics.h2(n + 1));
        h * h - h2
    }, |n| {
        let (h, h2) = (harmonics.h(n), harmonics.h2(n));
        h * h - h2 + Rational::from_int(2) * h / Rational::from_count(n as u64 + 1)
    }));

    let dist_cap = config.dist_cap;
    if dist_cap >= 2 {
        match cost_distribution_capped::<Rational>(Metric::Comparisons, dist_cap, dist_cap) {
            Ok(laws) => {
                results.push(check_sequence("comparison law: mean = recurrence", 2, dist_cap, |n| {
                    dc.get(n).cloned().unwrap_or_else(|| closed.dual_comparisons(n))
                }, |n| laws[n].mean()));
                results.push(check_sequence("comparison law: variance = closed form", 2, dist_cap, |n| {
                    closed.dual_variance(n)
                }, |n| laws[n].variance()));
                results.push(check_sequence("comparison law: E[C(C-1)] = closed form", 2, dist_cap, |n| {
                    closed.dual_factorial_moment(n)
                }, |n| laws[n].factorial_moment()));
            }
            Err(e) => results.push(CheckResult {
                name: "comparison law".into(),
                range: (2, dist_cap),
                mismatch: Some(Mismatch { n: dist_cap, expected: "a distribution".into(), got: e.to_string() }),
            }),
        }
        for metric in Metric::ALL {
            let laws = cost_distribution_capped::<Rational>(metric, dist_cap, dist_cap).unwrap_or_default();
            results.push(check_sequence(format!("{metric} law: total mass = 1"), 0, dist_cap, |_| {
                Rational::from_int(1)
            }, |n| laws.get(n).map(|d| d.total_mass()).unwrap_or_default()));
        }
    }

    let enum_cap = config.enum_cap.min(ENUMERATION_CAP);
    for metric in Metric::ALL {
        let laws = cost_distribution_capped::<Rational>(metric, enum_cap, enum_cap).unwrap_or_default();
        results.push(check_sequence(format!("{metric}: sorter enumeration = model law"), 0, enum_cap, |n| {
            LawText(laws.get(n).map(|d| d.probs().clone()).unwrap_or_default())
        }, |n| {
            LawText(
                enumerate_distribution(n, Algorithm::Dual, metric)
                    .map(|d| d.probs().clone())
                    .unwrap_or_default(),
            )
        }));
    }

    results
}

/// Average of an integer toll over all pivot-rank pairs `1 <= i < j <= n`.
fn pair_average(n: usize, toll: impl Fn(usize, usize) -> usize) -> Rational {
    let mut total = 0u64;
    for i in 1..n {
        for j in i + 1..=n {
            total += toll(i, j) as u64;
        }
    }
    Rational::from_count(total) / Rational::from_count((n * (n - 1) / 2) as u64)
}

#[derive(PartialEq)]
struct LawText(std::collections::BTreeMap<u64, Rational>);

impl fmt::Display for LawText {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (t, p)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{t}: {p}")?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_suite_passes() {
        let results = run_suite(VerifyConfig::default());
        for r in &results {
            assert!(r.passed(), "{r}");
        }
        assert!(results.len() >= 15);
    }

    #[test]
    fn tampered_coefficient_is_caught_at_first_n() {
        // 23n^2 replaced by 24n^2 in the second factorial moment.
        let mut closed = ClosedForms::<Rational>::new(12);
        let laws = cost_distribution_capped::<Rational>(Metric::Comparisons, 12, 12).unwrap();
        let r = check_sequence("tampered", 2, 12, |n| {
            closed.dual_factorial_moment(n) + Rational::from_count((n * n) as u64)
        }, |n| laws[n].factorial_moment());
        let m = r.mismatch.as_ref().expect("tampering must be detected");
        assert_eq!(m.n, 2);
        assert!(r.to_string().starts_with("FAIL"));
    }
}
