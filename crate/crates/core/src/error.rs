//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole: denominator vanishes at t = {0}")]
    Pole(String),
    #[error("raising operator index out of range: ({i}, {j}) on length {len}")]
    IndexRange { i: usize, j: usize, len: usize },
    #[error("integrity: expected a polynomial value, got {0}")]
    NonPolynomial(String),
    #[error("integrity: expected integer coefficients, got {0}")]
    NonIntegral(String),
    #[error("internal: singular transition matrix")]
    SingularSystem,
    #[error("window [{lo}, {hi}] does not contain component {n}")]
    WindowTooSmall { lo: i64, hi: i64, n: i64 },
    #[error("stability scan needs m_max >= bound + 3 (m_max = {m_max}, bound = {bound})")]
    ScanRangeTooSmall { m_max: i64, bound: i64 },
    #[error("not homogeneous of degree {expected}")]
    NotHomogeneous { expected: u32 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
