use thiserror::Error;

use crate::parse::ParseError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomials live in different variable contexts")]
    ContextMismatch,
    #[error("variable index {index} out of range for {nvars} variables")]
    VarIndexOutOfRange { index: usize, nvars: usize },
    #[error("invalid variable name `{0}`")]
    InvalidVariableName(String),
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("at least two variables are required, got {0}")]
    TooFewVariables(usize),
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("module rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("{which} has a nonzero constant term and is not a germ through the origin")]
    NotAGerm { which: &'static str },
    #[error("infinite quotient dimension for {what}")]
    InfiniteDimension { what: String },
    #[error("jet oracle did not stabilize up to degree {max_degree}")]
    OracleIndeterminate { max_degree: u32 },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("internal consistency failure: {0}")]
    Inconsistency(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
