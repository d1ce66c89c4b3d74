use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Graph data that is not a perfect matching on the flags.
    Malformed(String),
    LoopEdge,
    OutOfEnvelope(String),
    DegreeMismatch {
        expected: usize,
        found: usize,
    },
    KeyOutsideSpan(String),
    Singular(String),
    Inconsistent(String),
    MissingValue(String),
    DivisionByZero(String),
    Unknown(String),
    Parse(String),
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Malformed(m) => write!(f, "malformed graph: {m}"),
            Error::LoopEdge => write!(f, "edge is a loop"),
            Error::OutOfEnvelope(m) => write!(f, "outside supported range: {m}"),
            Error::DegreeMismatch { expected, found } => {
                write!(f, "degree mismatch: expected {expected}, found {found}")
            }
            Error::KeyOutsideSpan(k) => write!(f, "graph {k} is outside the computed span"),
            Error::Singular(m) => write!(f, "singular system: {m}"),
            Error::Inconsistent(m) => write!(f, "inconsistent data: {m}"),
            Error::MissingValue(m) => write!(f, "missing value: {m}"),
            Error::DivisionByZero(m) => write!(f, "division by zero: {m}"),
            Error::Unknown(m) => write!(f, "no evaluation strategy: {m}"),
            Error::Parse(m) => write!(f, "parse error: {m}"),
        }
    }
}

impl core::error::Error for Error {}
