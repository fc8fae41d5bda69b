use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid weight {0}: weights must be positive")]
    InvalidWeight(i64),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("graph does not contract to a smooth point")]
    NotContractible,
    #[error("no unique (-1)-vertex")]
    NoMinusOne,
    #[error("non-standard pair sequence: {0}")]
    NonStandard(String),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("unsupported component in twigs mode: {0}")]
    UnsupportedComponent(String),
    #[error("lambda {0} is outside the supported range 1..=8")]
    UnsupportedLambda(u32),
    #[error("malformed forest: {0}")]
    MalformedForest(String),
    #[error("no substitution for variable {0}")]
    MissingVariable(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
