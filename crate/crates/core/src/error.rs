use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Exact polynomial division left a nonzero remainder.
    #[error("polynomial division is not exact")]
    NonDivisible,

    /// A proven structural property of the object failed to hold.
    #[error("structure violation in {object}: {detail}")]
    StructureViolation { object: String, detail: String },

    #[error("partition enumeration is capped at n <= {cap}, got n = {n}")]
    TooLarge { n: usize, cap: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("denominator must have constant term 1 or -1")]
    InvalidDenominator,

    #[error("seed has {given} terms but the recurrence needs {needed}")]
    InsufficientSeed { given: usize, needed: usize },

    #[error("not enough samples: residue class {residue} has {given} of {needed}")]
    InsufficientData {
        residue: usize,
        given: usize,
        needed: usize,
    },

    #[error("quasi-polynomial fit disagrees with the sequence at n = {n}")]
    FitMismatch { n: usize },

    #[error("no period <= {bound} confirmed on a window of length {window}")]
    WindowTooSmall { bound: usize, window: usize },

    #[error("argument out of domain: {0}")]
    Domain(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn structure(object: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::StructureViolation {
            object: object.into(),
            detail: detail.into(),
        }
    }
}
