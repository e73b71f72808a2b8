use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("self loop on node {node}")]
    SelfLoop { node: usize },

    #[error("edge ({u}, {v}) references a node outside 0..{n}")]
    NodeOutOfRange { u: usize, v: usize, n: usize },

    #[error("edge probability {0} is outside [0, 1]")]
    InvalidProbability(f64),

    #[error("attachment count m={m} must satisfy 1 <= m < n={n}")]
    InvalidAttachment { m: usize, n: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("solution has length {found}, graph has {expected} nodes")]
    LengthMismatch { expected: usize, found: usize },

    #[error("rank d={d} is outside 1..={len}")]
    RankOutOfRange { d: usize, len: usize },

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("solution violates {0} constraint(s)")]
    Infeasible(u64),

    #[error("{0}")]
    Unsupported(&'static str),

    #[error("cannot summarize an empty result list")]
    EmptyResults,

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Error {
    Error::InvalidParameter {
        name,
        reason: reason.into(),
    }
}
