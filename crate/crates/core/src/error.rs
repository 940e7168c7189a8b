use thiserror::Error;

/// Everything that can go wrong when building or querying a structure.
///
/// Property failures (an axiom that does not hold, a set that is not normal)
/// are *not* errors: they come back as reports with witnesses. Errors are
/// reserved for malformed input, unmet preconditions and exhausted budgets.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("subset {mask:#x} references points outside a ground set of size {ground}")]
    GroundMismatch { mask: u64, ground: usize },

    #[error("ground sets differ ({left} vs {right} points)")]
    GroundSizeMismatch { left: usize, right: usize },

    #[error("{backend} relation cannot evaluate a {found} subset")]
    SubsetKind {
        backend: &'static str,
        found: &'static str,
    },

    #[error("budget exceeded: {dimension} needs {requested}, limit is {limit}")]
    BudgetExceeded {
        dimension: &'static str,
        requested: usize,
        limit: usize,
    },

    #[error("invalid model: {0}")]
    InvalidModel(String),

    #[error("the given sets are not orthogonal")]
    NotOrthogonal,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("distance between {0} and {1} is not certified inside the explored ball")]
    Uncertified(String, String),

    #[error("relation {0} is not transitive: {1}")]
    NotTransitive(&'static str, String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn budget(dimension: &'static str, requested: usize, limit: usize) -> Self {
        Error::BudgetExceeded {
            dimension,
            requested,
            limit,
        }
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidModel(msg.into())
    }

    pub(crate) fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
