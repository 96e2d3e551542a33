use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A prime was required.
    NotPrime(u64),
    /// An argument lies outside the domain of the operation.
    Domain(String),
    /// Binary series operation on truncations of different order.
    OrderMismatch { left: usize, right: usize },
    /// Reciprocal of a series with zero constant term.
    NotInvertible,
    /// A value that must be exact by theory came out otherwise.
    /// This indicates an arithmetic bug, never bad input.
    Consistency(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::Domain(msg) => write!(f, "argument out of domain: {msg}"),
            Error::OrderMismatch { left, right } => {
                write!(f, "series order mismatch: {left} vs {right}")
            }
            Error::NotInvertible => f.write_str("series has zero constant term"),
            Error::Consistency(msg) => write!(f, "internal consistency fault: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
