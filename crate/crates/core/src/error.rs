use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The constant term of a series that must be inverted is not `±1`.
    #[error("constant term {0} is not a unit")]
    NonUnitConstantTerm(String),

    /// An exact division that must succeed did not. This never happens for
    /// valid input; it indicates an arithmetic bug.
    #[error("non-integral intermediate at t^{index}")]
    NonIntegralResult { index: usize },

    #[error("expected constant term {expected}, found {found}")]
    ConstantTerm { expected: i64, found: String },

    #[error("coefficient of t^{index} is not a constant polynomial")]
    NonConstantCoefficient { index: usize },

    #[error("stratum markers exist only for part sizes 1..={max}, requested {requested}")]
    TooManyMarkers { max: usize, requested: usize },

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
