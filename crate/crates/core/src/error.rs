use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument fell outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The brute-force oracle refuses sizes that would explode combinatorially.
    #[error("enumeration limit: n = {n} exceeds the oracle cap of {max}")]
    OracleLimit { n: usize, max: usize },

    /// An arithmetic invariant that must always hold was violated.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
