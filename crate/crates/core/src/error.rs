use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Parameters fall outside the domain of the requested quantity.
    #[error("domain error: {0}")]
    Domain(String),

    /// An enumeration would exceed its configured size guard.
    #[error("size guard exceeded: {what} = {value} > {limit}")]
    Guard {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    /// A value does not satisfy the invariants of its type.
    #[error("invariant violated: {0}")]
    Invariant(String),

    /// The u-sequence decode map is not injective at this part threshold.
    #[error("decode is not injective: a = {a} is below the threshold {threshold}")]
    NotInjective { a: usize, threshold: usize },

    #[error("encoding error: {0}")]
    Encoding(String),

    /// Two independent computations of the same quantity disagree.
    #[error("consistency error: {0}")]
    Consistency(String),
}

impl Error {
    pub(crate) fn guard(what: &'static str, value: usize, limit: usize) -> Result<()> {
        if value > limit {
            Err(Error::Guard { what, value, limit })
        } else {
            Ok(())
        }
    }
}
