use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A Laurent polynomial cannot be evaluated at zero.
    #[error("cannot evaluate at z = 0: negative exponents are undefined")]
    ZeroEvaluation,

    #[error("numeric z must be nonzero")]
    ZeroParameter,

    #[error("modulus m must be at least 1")]
    ZeroModulus,

    #[error("invalid rational literal {0:?}")]
    ParseRational(String),

    #[error("malformed JSON value: {0}")]
    Json(String),
}
