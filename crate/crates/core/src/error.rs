use thiserror::Error;

/// Errors raised by the exact computations in this crate.
///
/// `NotDivisible` and `EulerViolation` indicate a broken invariant rather than
/// bad input; they are reported instead of being rounded away.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("coefficient {coeff} of m^{e}*n^{v} is not divisible by {divisor}")]
    NotDivisible {
        e: u32,
        v: u32,
        coeff: String,
        divisor: String,
    },

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("permutation length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error(
        "r = {r} exceeds the enumeration ceiling {ceiling} (projected work r*r! = {work:.3e})"
    )]
    LimitExceeded { r: usize, ceiling: usize, work: f64 },

    #[error("Euler relation violated: r = {r}, e = {e}, v = {v}, faces = {faces}")]
    EulerViolation {
        r: usize,
        e: u32,
        v: u32,
        faces: usize,
    },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid face shape: {0}")]
    InvalidShape(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn limit(r: usize, ceiling: usize) -> Self {
        let work = (1..=r).fold(r as f64, |acc, i| acc * i as f64);
        Error::LimitExceeded { r, ceiling, work }
    }
}
