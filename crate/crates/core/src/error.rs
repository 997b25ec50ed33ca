use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// Malformed or out-of-contract input. `field` names the offending location
    /// (e.g. `paths[2][1]`) when one exists.
    #[error("invalid input at {field}: {message}")]
    InvalidInput { field: String, message: String },

    /// A hard size guard refused the request.
    #[error("{what} = {requested} exceeds the guard limit {limit} (set CROSSFREE_GUARD_OVERRIDE to raise it; may be very slow)")]
    GuardExceeded {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    #[error("no dominant branch point: {0}")]
    NoBranchPoint(String),

    #[error("newton refinement did not converge after {steps} steps (|F| = {f_residual:e}, |F_w| = {fw_residual:e})")]
    NewtonDiverged {
        steps: usize,
        f_residual: f64,
        fw_residual: f64,
    },

    #[error("unknown 2-ordered variant `{0}` (expected one of: A, B, relaxed)")]
    UnknownVariant(String),

    #[error("table too short: need {needed} entries, have {have}")]
    TableTooShort { needed: usize, have: usize },

    #[error("zero denominator at index {0}")]
    ZeroDenominator(usize),

    #[error("path counts differ: {upper} on U, {lower} on L")]
    PathCountMismatch { upper: usize, lower: usize },

    #[error("not a polygonization: {0}")]
    NotPolygonization(String),

    #[error("partition on {chain} is not ordered")]
    NotOrdered { chain: &'static str },

    #[error("not a hamiltonian path from the ordered construction: {0}")]
    NotConstructedPath(String),
}

impl Error {
    pub(crate) fn input(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::InvalidInput {
            field: field.into(),
            message: message.into(),
        }
    }
}
