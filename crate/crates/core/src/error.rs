use thiserror::Error;

/// Errors raised by family constructors, the series engine and the checkers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("u = 1 is not admissible for Frobenius-Euler families")]
    UEqualsOne,
    #[error("u = 0 has no inverse")]
    UZero,
    #[error("lambda must be nonzero for this operation")]
    LambdaZero,
    #[error("series has zero constant term and cannot be inverted")]
    ZeroConstantTerm,
    #[error("order r must be at least 1, got {0}")]
    BadOrder(u32),
    #[error("d must be at least 1, got {0}")]
    BadD(u32),
    #[error("u^{d} = 1, the distribution identity is undefined")]
    RootOfUnityLikeU { d: u32 },
    #[error("Stirling index ({n}, {k}) lies outside the triangle 0 <= k <= n")]
    IndexOutOfTriangle { n: usize, k: usize },
    #[error("invalid rational `{0}`")]
    ParseRational(String),
    #[error("denominator is zero")]
    ZeroDenominator,
}

pub type Result<T> = std::result::Result<T, Error>;
