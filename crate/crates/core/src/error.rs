use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("usage: {0}")]
    Usage(String),
    #[error("q^{target} p(1/q) is not a polynomial: degree {degree} exceeds {target}")]
    NotPolynomial { degree: usize, target: usize },
    #[error("series constant term is not 1; cannot invert")]
    NotInvertible,
    #[error("operation unsupported in {0} mode")]
    UnsupportedMode(&'static str),
    #[error("series of order 0 has no q-derivative")]
    EmptyResult,
    #[error("brute-force enumeration at n={n} exceeds the bound {bound}")]
    BoundExceeded { n: usize, bound: usize },
    #[error("invalid object: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
