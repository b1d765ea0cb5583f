//! Closed-form expectations and second moments.
//!
//! The dual-pivot exchange and stage formulas only agree with the recurrence
//! for `n >= 4`; below that the recurrence is authoritative and the functions
//! return [`Error::BelowThreshold`].

use crate::error::{Error, Result};
use crate::oracle::harmonic::HarmonicTable;
use crate::scalar::Scalar;

pub const CLOSED_FORM_THRESHOLD: usize = 4;

/// Closed forms evaluated against a shared harmonic table, for sweeping many
/// `n` without recomputing harmonic sums. The table grows on demand.
#[derive(Debug, Clone)]
pub struct ClosedForms<T> {
    table: HarmonicTable<T>,
}

fn int<T: Scalar>(v: usize) -> T {
    T::from_count(v as u64)
}

impl<T: Scalar> ClosedForms<T> {
    /// Harmonic numbers are computed lazily; `n_hint` only pre-sizes the
    /// first-order column.
    pub fn new(n_hint: usize) -> Self {
        let mut table = HarmonicTable::empty();
        table.extend_h(n_hint + 1);
        Self { table }
    }

    pub fn harmonics(&self) -> &HarmonicTable<T> {
        &self.table
    }

    fn h(&mut self, n: usize) -> T {
        self.table.extend_h(n);
        self.table.h(n).clone()
    }

    fn h2(&mut self, n: usize) -> T {
        self.table.extend_h2(n);
        self.table.h2(n).clone()
    }

    /// `2(n+1)H_n - 4n`.
    pub fn dual_comparisons(&mut self, n: usize) -> T {
        int::<T>(2) * int(n + 1) * self.h(n) - int::<T>(4) * int(n)
    }

    /// `(4/5)(n+1)H_n - (24n+4)/25`, for `n >= 4`.
    pub fn dual_exchanges(&mut self, n: usize) -> Result<T> {
        check_threshold("dual-pivot exchanges", n)?;
        Ok(T::from_ratio(4, 5) * int(n + 1) * self.h(n) - int::<T>(24 * n + 4) / int(25))
    }

    /// `(2/5)(n+1) - 1/2`, for `n >= 4`.
    pub fn dual_stages(&mut self, n: usize) -> Result<T> {
        check_threshold("dual-pivot stages", n)?;
        Ok(T::from_ratio(2, 5) * int(n + 1) - T::from_ratio(1, 2))
    }

    /// Second factorial moment `E[C_n (C_n - 1)]` of dual-pivot comparisons:
    /// `4(n+1)^2 (H_{n+1}^2 - H2_{n+1}) - 4 H_{n+1} (n+1)(4n+3) + 23n^2 + 33n + 12`.
    ///
    /// Also evaluates to the correct value 0 at `n = 0, 1`.
    pub fn dual_factorial_moment(&mut self, n: usize) -> T {
        let m = n + 1;
        let h = self.h(m);
        let h2 = self.h2(m);
        int::<T>(4) * int(m * m) * (h.clone() * h.clone() - h2) - int::<T>(4) * h * int(m) * int(4 * n + 3)
            + int(23 * n * n + 33 * n + 12)
    }

    /// Variance of dual-pivot comparisons:
    /// `7n^2 - 4(n+1)^2 H2_n - 2(n+1)H_n + 13n`.
    pub fn dual_variance(&mut self, n: usize) -> T {
        let m = n + 1;
        int::<T>(7 * n * n) - int::<T>(4 * m * m) * self.h2(n) - int::<T>(2 * m) * self.h(n) + int(13 * n)
    }

    /// Mean comparisons of single-pivot quicksort, `2(n+1)H_n - 4n`.
    pub fn classic_comparisons(&mut self, n: usize) -> T {
        let h = self.h(n);
        int::<T>(2 * (n + 1)) * h - int(4 * n)
    }

    /// Mean exchanges of single-pivot quicksort, `(2(n+1)H_n - 3n)/6`.
    pub fn classic_exchanges(&mut self, n: usize) -> T {
        let h = self.h(n);
        (int::<T>(2 * (n + 1)) * h - int(3 * n)) / int(6)
    }
}

fn check_threshold(what: &'static str, n: usize) -> Result<()> {
    if n < CLOSED_FORM_THRESHOLD {
        Err(Error::BelowThreshold { what, n, min: CLOSED_FORM_THRESHOLD })
    } else {
        Ok(())
    }
}

pub fn closed_dual_comparisons<T: Scalar>(n: usize) -> T {
    ClosedForms::new(n).dual_comparisons(n)
}

pub fn closed_dual_exchanges<T: Scalar>(n: usize) -> Result<T> {
    check_threshold("dual-pivot exchanges", n)?;
    ClosedForms::new(n).dual_exchanges(n)
}

pub fn closed_dual_stages<T: Scalar>(n: usize) -> Result<T> {
    check_threshold("dual-pivot stages", n)?;
    ClosedForms::new(0).dual_stages(n)
}

pub fn closed_dual_factorial_moment<T: Scalar>(n: usize) -> T {
    ClosedForms::new(n).dual_factorial_moment(n)
}

pub fn closed_dual_variance<T: Scalar>(n: usize) -> T {
    ClosedForms::new(n).dual_variance(n)
}

pub fn closed_classic_comparisons<T: Scalar>(n: usize) -> T {
    ClosedForms::new(n).classic_comparisons(n)
}

pub fn closed_classic_exchanges<T: Scalar>(n: usize) -> T {
    ClosedForms::new(n).classic_exchanges(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(p: i64, d: i64) -> Rational {
        Rational::from_ratio(p, d)
    }

    #[test]
    fn dual_comparison_values() {
        assert_eq!(closed_dual_comparisons::<Rational>(0), q(0, 1));
        assert_eq!(closed_dual_comparisons::<Rational>(2), q(1, 1));
        assert_eq!(closed_dual_comparisons::<Rational>(3), q(8, 3));
        assert_eq!(closed_dual_comparisons::<Rational>(4), q(29, 6));
    }

    #[test]
    fn dual_exchange_values() {
        assert_eq!(closed_dual_exchanges::<Rational>(4).unwrap(), q(13, 3));
        assert_eq!(closed_dual_exchanges::<Rational>(5).unwrap(), q(6, 1));
        assert_eq!(
            closed_dual_exchanges::<Rational>(3),
            Err(Error::BelowThreshold { what: "dual-pivot exchanges", n: 3, min: 4 })
        );
    }

    #[test]
    fn unguarded_formula_below_threshold() {
        // What the formulas would give if evaluated at n = 2, 3.
        let h = |n| crate::oracle::harmonic::<Rational>(n);
        let exch = |n: i64| q(4, 5) * q(n + 1, 1) * h(n as usize) - q(24 * n + 4, 25);
        assert_eq!(exch(2), q(38, 25));
        assert_eq!(exch(3), q(212, 75));
        let stages = |n: i64| q(2, 5) * q(n + 1, 1) - q(1, 2);
        assert_eq!(stages(2), q(7, 10));
    }

    #[test]
    fn dual_stage_values() {
        assert_eq!(closed_dual_stages::<Rational>(4).unwrap(), q(3, 2));
        assert_eq!(closed_dual_stages::<Rational>(9).unwrap(), q(7, 2));
        assert!(closed_dual_stages::<Rational>(2).is_err());
    }

    #[test]
    fn second_moment_values() {
        assert_eq!(closed_dual_factorial_moment::<Rational>(2), q(0, 1));
        assert_eq!(closed_dual_factorial_moment::<Rational>(3), q(14, 3));
        assert_eq!(closed_dual_variance::<Rational>(2), q(0, 1));
        assert_eq!(closed_dual_variance::<Rational>(3), q(2, 9));
        for n in 0..2 {
            assert_eq!(closed_dual_factorial_moment::<Rational>(n), q(0, 1));
            assert_eq!(closed_dual_variance::<Rational>(n), q(0, 1));
        }
    }

    #[test]
    fn classic_values() {
        assert_eq!(closed_classic_comparisons::<Rational>(2), q(1, 1));
        assert_eq!(closed_classic_exchanges::<Rational>(1), q(1, 6));
        assert_eq!(closed_classic_comparisons::<Rational>(4), closed_dual_comparisons::<Rational>(4));
    }

    #[test]
    fn float_route_agrees() {
        let mut exact = ClosedForms::<Rational>::new(50);
        let mut float = ClosedForms::<f64>::new(50);
        for n in [4usize, 17, 50] {
            let pairs = [
                (exact.dual_comparisons(n).approx(), float.dual_comparisons(n)),
                (exact.dual_exchanges(n).unwrap().approx(), float.dual_exchanges(n).unwrap()),
                (exact.dual_variance(n).approx(), float.dual_variance(n)),
                (exact.classic_exchanges(n).approx(), float.classic_exchanges(n)),
            ];
            for (e, f) in pairs {
                assert!((e - f).abs() <= 1e-9 * e.abs().max(1.0), "{e} vs {f}");
            }
        }
    }
}
