use std::f64::consts::PI;

use crate::oracle::closed::ClosedForms;
use crate::scalar::Scalar;
use crate::Rational;

/// Leading coefficient of the comparison variance, `7 - 2 pi^2 / 3`.
pub const VARIANCE_LEADING_CONSTANT: f64 = 7.0 - 2.0 * PI * PI / 3.0;

fn n_ln_n(n: f64) -> f64 {
    n * n.ln()
}

/// `2 n ln n`, the leading term of mean comparisons for both variants.
pub fn comparisons_curve(n: f64) -> f64 {
    2.0 * n_ln_n(n)
}

/// `(4/5) n ln n`.
pub fn dual_exchanges_curve(n: f64) -> f64 {
    0.8 * n_ln_n(n)
}

/// `(1/3) n ln n`.
pub fn classic_exchanges_curve(n: f64) -> f64 {
    n_ln_n(n) / 3.0
}

/// `(2/5) n`.
pub fn dual_stages_curve(n: f64) -> f64 {
    0.4 * n
}

/// `(7 - 2 pi^2/3) n^2 - 2 n ln n`.
pub fn variance_curve(n: f64) -> f64 {
    VARIANCE_LEADING_CONSTANT * n * n - 2.0 * n_ln_n(n)
}

/// An exact value next to its asymptotic approximation.
#[derive(Debug, Clone, PartialEq)]
pub struct CurvePoint {
    pub exact: Rational,
    pub exact_float: f64,
    pub asymptotic: f64,
}

impl CurvePoint {
    fn new(exact: Rational, asymptotic: f64) -> Self {
        let exact_float = exact.approx();
        Self { exact, exact_float, asymptotic }
    }

    /// `exact / asymptotic`.
    pub fn ratio(&self) -> f64 {
        self.exact_float / self.asymptotic
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AsymptoticReport {
    pub n: usize,
    pub dual_comparisons: CurvePoint,
    pub dual_exchanges: CurvePoint,
    pub classic_exchanges: CurvePoint,
    pub dual_variance: CurvePoint,
}

impl AsymptoticReport {
    /// Mean exchanges of dual pivot relative to classic, exact values.
    pub fn exchange_ratio(&self) -> f64 {
        self.dual_exchanges.exact_float / self.classic_exchanges.exact_float
    }

    /// `Var(C_n) / n^2`, to be held against [`VARIANCE_LEADING_CONSTANT`].
    pub fn variance_per_n_squared(&self) -> f64 {
        let n = self.n as f64;
        self.dual_variance.exact_float / (n * n)
    }
}

/// Exact closed forms at `n` next to their leading-order curves. `n >= 2`; for
/// `n < 4` the dual exchange entry uses the unguarded formula.
pub fn asymptotics(n: usize) -> AsymptoticReport {
    assert!(n >= 2, "asymptotics need n >= 2");
    let mut closed = ClosedForms::<Rational>::new(n);
    asymptotics_with(&mut closed, n)
}

pub(crate) fn asymptotics_with(closed: &mut ClosedForms<Rational>, n: usize) -> AsymptoticReport {
    let x = n as f64;
    let dual_exchanges = closed.dual_exchanges(n.max(4)).ok().filter(|_| n >= 4).unwrap_or_else(|| {
        let h = closed.harmonics().h(n).clone();
        Rational::from_ratio(4, 5) * Rational::from_count(n as u64 + 1) * h
            - Rational::from_ratio(24 * n as i64 + 4, 25)
    });
    AsymptoticReport {
        n,
        dual_comparisons: CurvePoint::new(closed.dual_comparisons(n), comparisons_curve(x)),
        dual_exchanges: CurvePoint::new(dual_exchanges, dual_exchanges_curve(x)),
        classic_exchanges: CurvePoint::new(closed.classic_exchanges(n), classic_exchanges_curve(x)),
        dual_variance: CurvePoint::new(closed.dual_variance(n), variance_curve(x)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_admissible_size_is_finite() {
        let r = asymptotics(2);
        for p in [&r.dual_comparisons, &r.dual_exchanges, &r.classic_exchanges, &r.dual_variance] {
            assert!(p.exact_float.is_finite() && p.asymptotic.is_finite() && p.ratio().is_finite());
        }
        assert!(r.exchange_ratio().is_finite());
    }

    #[test]
    fn leading_constant() {
        assert!((VARIANCE_LEADING_CONSTANT - 0.420_264).abs() < 1e-6);
    }

    #[test]
    fn exchange_ratio_falls_toward_twelve_fifths() {
        // Lower-order terms keep the ratio above 2.5 until n is about 3300.
        let r = asymptotics(1000);
        assert!((r.exchange_ratio() - 2.520_06).abs() < 1e-4, "{}", r.exchange_ratio());
        let mut closed = ClosedForms::<f64>::new(1_000_000);
        let ratio = |c: &mut ClosedForms<f64>, n| c.dual_exchanges(n).unwrap() / c.classic_exchanges(n);
        let mut prev = f64::INFINITY;
        for n in [1_000, 10_000, 100_000, 1_000_000] {
            let now = ratio(&mut closed, n);
            assert!(now < prev && now > 2.4, "n={n}: {now}");
            prev = now;
        }
    }
}
