//! Instrumented dual-pivot Quicksort together with the exact machinery needed
//! to check its average-case cost model.
//!
//! * [`sort`] holds the instrumented sorters and the partition routine whose
//!   counters follow the comparison/exchange/stage cost model.
//! * [`oracle`] computes harmonic numbers, the closed forms, the expectation
//!   recurrences and the full cost distributions, generic over a [`Scalar`].
//! * [`enumerate`] drives the real sorter through every branch of its
//!   randomness to obtain exact cost laws.
//! * [`experiments`] runs seeded Monte Carlo batches and compares them with
//!   the oracle.
//! * [`verify`] bundles the exact cross-checks into a reportable suite.

pub mod enumerate;
pub mod error;
pub mod experiments;
pub mod model;
pub mod oracle;
pub mod random;
pub mod scalar;
pub mod sort;
pub mod verify;

pub use error::{Error, Result};
pub use model::{Algorithm, Metric};
pub use scalar::Scalar;

/// Arbitrary-precision rational, always kept in lowest terms.
pub type Rational = num_rational::BigRational;

/// Exact law of a cost metric.
pub type ExactDistribution = oracle::CostDistribution<Rational>;
/// Floating-point law of a cost metric; used past the exact-mode cap.
pub type FloatDistribution = oracle::CostDistribution<f64>;

pub type ExactTable = oracle::ExpectationTable<Rational>;
pub type FloatTable = oracle::ExpectationTable<f64>;
