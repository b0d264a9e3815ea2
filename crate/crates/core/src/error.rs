use thiserror::Error;

/// Errors raised by constructors, bijections, and the enumeration harness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AtlasError {
    /// Text did not match the grammar of the named object kind.
    #[error("parse error ({rule}): {message}")]
    Parse { rule: &'static str, message: String },

    /// Structurally malformed value (e.g. a word that is not a rearrangement of 1..n).
    #[error("invalid {what}: {message}")]
    Invalid { what: &'static str, message: String },

    /// The operation is only defined on bi-increasing permutations.
    #[error("permutation {0} is not bi-increasing (contains a 321 pattern)")]
    NotBiIncreasing(String),

    /// Input is well-formed but outside the operation's domain.
    #[error("domain violation: {0}")]
    Domain(String),

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("unknown {what} `{name}`")]
    Unknown { what: &'static str, name: String },

    /// Exhaustive enumeration would exceed the configured cap.
    #[error("n = {n} exceeds the enumeration cap {cap} for family {family}; pass --force to override")]
    CapExceeded { family: String, n: usize, cap: usize },
}

impl AtlasError {
    pub fn parse(rule: &'static str, message: impl Into<String>) -> Self {
        AtlasError::Parse { rule, message: message.into() }
    }

    pub fn invalid(what: &'static str, message: impl Into<String>) -> Self {
        AtlasError::Invalid { what, message: message.into() }
    }

    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            AtlasError::Parse { .. } | AtlasError::Unknown { .. } => 2,
            AtlasError::Invalid { .. } => 2,
            AtlasError::NotBiIncreasing(_) | AtlasError::Domain(_) | AtlasError::OutOfRange(_) => 3,
            AtlasError::CapExceeded { .. } => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, AtlasError>;
