use crate::model::{Algorithm, Metric};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("segment of length {len} cannot be partitioned (need at least 2 keys)")]
    SegmentTooShort { len: usize },

    #[error("keys are not a permutation of 1..={n}")]
    NotAPermutation { n: usize },

    #[error("closed form for {what} is only valid for n >= {min} (got n = {n}); use dp_expected below that")]
    BelowThreshold { what: &'static str, n: usize, min: usize },

    #[error("n = {n} exceeds the cap of {cap} for {what}{hint}")]
    SizeCap { what: &'static str, n: usize, cap: usize, hint: &'static str },

    #[error("{algorithm} quicksort does not model {metric}")]
    Unsupported { algorithm: Algorithm, metric: Metric },

    #[error("invalid trial plan: {0}")]
    InvalidPlan(String),

    #[error("cannot merge aggregates of different plans")]
    PlanMismatch,

    #[error("need at least {need} trials, have {have}")]
    TooFewTrials { need: u64, have: u64 },
}
