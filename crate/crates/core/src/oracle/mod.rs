//! Analytical side of the lab: harmonic numbers, closed forms, expectation
//! recurrences and full cost distributions.
//!
//! Everything here is generic over [`Scalar`](crate::Scalar); instantiate with
//! [`Rational`](crate::Rational) for exact answers or `f64` for speed.

mod asymptotic;
mod closed;
mod distribution;
mod harmonic;
mod recurrence;

pub use asymptotic::{
    asymptotics, classic_exchanges_curve, comparisons_curve, dual_exchanges_curve, dual_stages_curve,
    variance_curve, AsymptoticReport, CurvePoint, VARIANCE_LEADING_CONSTANT,
};
pub use closed::{
    closed_classic_comparisons, closed_classic_exchanges, closed_dual_comparisons, closed_dual_exchanges,
    closed_dual_factorial_moment, closed_dual_stages, closed_dual_variance, ClosedForms, CLOSED_FORM_THRESHOLD,
};
pub use distribution::{cost_distribution, cost_distribution_capped, mean_of, variance_of, CostDistribution};
pub use harmonic::{harmonic, harmonic2, HarmonicTable};
pub use recurrence::{
    classic_exchange_initial, dp_classic_exchanges_with, dp_expected, mean_toll, ExpectationTable,
};
