use thiserror::Error;

/// Errors raised by the polynomial, matrix and verification layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),

    /// A coefficient could not be divided exactly.
    #[error("inexact halving: coefficient {coeff} of x^{x}y^{y} is odd")]
    Exactness { x: u32, y: u32, coeff: String },

    #[error("matrix of size {size} exceeds the determinant bound {bound}")]
    Capacity { size: usize, bound: usize },

    /// Two routes that must agree produced different values.
    #[error("identity violation: {0}")]
    IdentityViolation(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
