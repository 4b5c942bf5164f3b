//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("exponent vectors have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("polynomials live in different rings ({0} vs {1} variables)")]
    NvarsMismatch(usize, usize),
    #[error("invalid exponent sequence: {0}")]
    InvalidExponents(String),
    #[error("parameter t = {0} is degenerate (t must satisfy |t| not in {{0, 1}})")]
    DegenerateParameter(String),
    #[error("index pair ({i}, {j}) out of range for {len} variables")]
    IndexOutOfRange { i: usize, j: usize, len: usize },
    #[error("invalid subresultant index i = {i} (need deg f >= deg g >= i >= 1)")]
    SubresultantIndex { i: usize },
    #[error("expected a nonzero polynomial")]
    ZeroPolynomial,
    #[error("expected a univariate polynomial")]
    NotUnivariate,
    #[error("expected homogeneous generators")]
    NotHomogeneous,
    #[error("empty generator list")]
    EmptyGenerators,
    #[error("budget exhausted after {spent} units (cap {cap})")]
    BudgetExhausted { spent: usize, cap: usize },
    #[error("Hilbert function did not stabilize while scanning degrees {from}..={to}")]
    NotStabilized { from: u32, to: u32 },
    #[error("no verified decomposition found; attempted t values: {attempted:?}")]
    RetriesExhausted { attempted: Vec<String> },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
