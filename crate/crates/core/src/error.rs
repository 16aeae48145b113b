//! Error type shared by all modules.

use thiserror::Error;

/// Errors reported by cost-space operations.
///
/// The split mirrors the CLI exit-code convention: every variant here is an
/// input-side problem (exit 1); property violations are ordinary results,
/// not errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed input data: non-square matrix, duplicate labels, negative
    /// entries, unparsable values, unknown labels.
    #[error("input error: {0}")]
    Input(String),

    /// A parameter is outside its allowed range (radius < 0, scheme p < 1,
    /// equal endpoints, ...).
    #[error("parameter error: {0}")]
    Parameter(String),

    /// The operation is undefined on these values: an INF leg where a finite
    /// cost is required, an all-INF shift, a vector outside the zero-sum
    /// group, an infeasible deviation query.
    #[error("domain error: {0}")]
    Domain(String),

    /// A structural hypothesis fails: rewriting structure with two distinct
    /// paths, a letter not expressible in the base, mismatched grounds,
    /// grounds too large for an exhaustive subset scan.
    #[error("structure error: {0}")]
    Structure(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn parameter(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn structure(msg: impl Into<String>) -> Self {
        Error::Structure(msg.into())
    }
}
