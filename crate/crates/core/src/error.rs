use thiserror::Error;

use crate::code::SpecViolation;

/// Errors raised by polynomial arithmetic, code construction and the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisorZero,
    #[error("gcd(0, 0) is undefined")]
    GcdUndefined,
    #[error("the zero polynomial has no reciprocal")]
    ReciprocalOfZero,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("polynomial is not invertible modulo the given modulus")]
    NotInvertible,
    #[error("length {0} is even; only odd lengths are supported")]
    EvenLengthUnsupported(usize),
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial is not a divisor")]
    NotADivisor,
    #[error("invalid code spec: {0}")]
    InvalidSpec(SpecViolation),
    #[error("ambient mismatch: ({0}, {1}) vs ({2}, {3})")]
    AmbientMismatch(usize, usize, usize, usize),
    #[error("{what} has 2^{log2_size} elements, above the cap of {cap}")]
    TooLarge {
        what: &'static str,
        log2_size: usize,
        cap: u64,
    },
    #[error("the code has a single codeword, so its minimum distance is undefined")]
    TrivialCode,
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}
