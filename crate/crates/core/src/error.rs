use thiserror::Error;

use crate::qcore::Rational;

/// Errors produced by the library operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("q-binomial coefficient requires k <= n, got n={n}, k={k}")]
    BinomialArgs { n: u32, k: u32 },
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(u32, u32),
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("polynomial must not depend on x0")]
    NotXOnly,
    #[error("polynomial must be real-valued")]
    NotRealValued,
    #[error("input is not (1/q,q)-harmonic, residual: {0}")]
    NotHarmonic(String),
    #[error("construction requires q > 1, got q = {0}")]
    QNotGreaterOne(Rational),
    #[error("invalid q-context: {0}")]
    InvalidContext(String),
    #[error("mismatched q-contexts")]
    ContextMismatch,
    #[error("linear system is singular or inconsistent")]
    SingularSystem,
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
