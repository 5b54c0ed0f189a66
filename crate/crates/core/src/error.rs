use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid urn parameters N={total}, K={good}: need 1 <= K <= N")]
    InvalidParams { total: u64, good: u64 },

    /// An argument outside the domain of the requested operation.
    #[error("{op}: {detail}")]
    Domain { op: &'static str, detail: String },

    /// A guard on work or memory was hit. Not a mathematical failure.
    #[error("resource limit: {0}")]
    ResourceLimit(String),

    #[error("K = N * {p_num}/{p_den} is not an integer for N={total}")]
    NonIntegerGood { total: u64, p_num: u64, p_den: u64 },
}

impl Error {
    pub(crate) fn domain(op: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain {
            op,
            detail: detail.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
