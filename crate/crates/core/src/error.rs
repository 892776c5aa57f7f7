use thiserror::Error;

use crate::structures::CheckReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: String, right: String },

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("invalid scalar {text:?}: {reason}")]
    InvalidScalar { text: String, reason: String },

    #[error("linear map is singular")]
    SingularMap,

    #[error("syntax error: {0}")]
    Syntax(String),

    #[error("shape error at {path}: {message}")]
    Shape { path: String, message: String },

    #[error("precondition failed: {reason}")]
    PreconditionFailed {
        reason: String,
        report: Option<CheckReport>,
    },

    #[error("{construction}: output does not satisfy its defining identities")]
    TheoremCheckFailed {
        construction: &'static str,
        report: CheckReport,
    },

    #[error("unknown condition {0:?}")]
    UnknownCondition(String),

    #[error("kind mismatch: {left} vs {right}")]
    KindMismatch { left: String, right: String },

    #[error("index sets differ")]
    OmegaMismatch,

    #[error("missing coefficient for label {0:?}")]
    MissingCoefficient(String),

    #[error("coefficient given for unknown label {0:?}")]
    UnknownLabel(String),

    #[error("operator family has nonzero weight at label {0:?}")]
    NonzeroWeight(String),

    #[error("derived order {n} exceeds the configured bound {max}")]
    DerivedOrderTooLarge { n: u32, max: u32 },

    #[error("unsupported variant: {0}")]
    UnsupportedVariant(String),

    #[error("search space of {candidates} candidates exceeds budget {budget}")]
    BudgetExceeded { candidates: String, budget: u64 },

    #[error("enumeration requires a prime field")]
    NonFiniteField,

    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
}

impl Error {
    pub(crate) fn shape(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Shape {
            path: path.into(),
            message: message.into(),
        }
    }

    pub(crate) fn precondition(reason: impl Into<String>, report: Option<CheckReport>) -> Self {
        Error::PreconditionFailed {
            reason: reason.into(),
            report,
        }
    }
}
