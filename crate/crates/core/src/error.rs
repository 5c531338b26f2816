use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Family parameters outside their admissible range.
    #[error("parameter domain error for {family}: {constraint}")]
    ParameterDomain {
        family: &'static str,
        constraint: String,
    },

    /// Adding an existing edge, removing a non-edge, loops, bad endpoints.
    #[error("edit error on pair ({u}, {v}): {reason}")]
    Edit { u: usize, v: usize, reason: String },

    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// Generic contract violation on an argument (bad subsets, dimension mismatch, ...).
    #[error("parameter error: {0}")]
    Parameter(String),

    #[error("polynomial is not square-free")]
    NotSquareFree,

    #[error("order {n} exceeds the enumeration ceiling {ceiling}; raise LAPLAB_MAX_N or shard the run")]
    Capability { n: usize, ceiling: usize },

    #[error("graph order {0} exceeds the supported maximum of 64 vertices")]
    TooLarge(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
