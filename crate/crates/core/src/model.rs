use std::fmt;
use std::str::FromStr;

/// Which quicksort variant a run or a formula refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    Dual,
    Classic,
}

/// One of the three tallies kept by [`crate::sort::CostCounters`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Metric {
    Comparisons,
    Exchanges,
    Stages,
}

impl Algorithm {
    pub const ALL: [Algorithm; 2] = [Algorithm::Dual, Algorithm::Classic];

    /// Classic exchanges are only available analytically; the instrumented
    /// classic sorter never counts them.
    pub fn measures(self, metric: Metric) -> bool {
        !(self == Algorithm::Classic && metric == Metric::Exchanges)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Algorithm::Dual => "dual",
            Algorithm::Classic => "classic",
        }
    }
}

impl Metric {
    pub const ALL: [Metric; 3] = [Metric::Comparisons, Metric::Exchanges, Metric::Stages];

    pub fn as_str(self) -> &'static str {
        match self {
            Metric::Comparisons => "comparisons",
            Metric::Exchanges => "exchanges",
            Metric::Stages => "stages",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseNameError(pub String);

impl fmt::Display for ParseNameError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unrecognised name `{}`", self.0)
    }
}

impl std::error::Error for ParseNameError {}

impl FromStr for Algorithm {
    type Err = ParseNameError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "dual" => Ok(Algorithm::Dual),
            "classic" => Ok(Algorithm::Classic),
            _ => Err(ParseNameError(s.to_owned())),
        }
    }
}

impl FromStr for Metric {
    type Err = ParseNameError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "comparisons" => Ok(Metric::Comparisons),
            "exchanges" => Ok(Metric::Exchanges),
            "stages" => Ok(Metric::Stages),
            _ => Err(ParseNameError(s.to_owned())),
        }
    }
}
