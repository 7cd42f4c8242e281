use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation (n = 0, a
    /// non-increasing list, a non-apart pair, ...).
    #[error("domain error: {0}")]
    Domain(String),
    /// A coloring was queried outside its declared domain.
    #[error("value {value} is outside the coloring domain ({domain})")]
    OutsideColoring { value: String, domain: String },
    #[error("step budget of {limit} exhausted{}", stage.map(|s| format!(" at stage {s}")).unwrap_or_default())]
    BudgetExceeded { limit: u64, stage: Option<usize> },
    #[error("witness number for {pattern} not determined within max_n = {max_n}")]
    WitnessUnknown { pattern: String, max_n: usize },
    #[error("insufficient witness: {0}")]
    InsufficientWitness(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
