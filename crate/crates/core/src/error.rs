//! Error type shared across the crate.

use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

/// Errors produced by scenario validation, the analytic solvers and the
/// slice-reassignment emulator.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An input violated a documented invariant.
    InvalidInput(String),
    /// A computation would exceed its configured memory or enumeration bound.
    Capacity { needed: u64, limit: u64, what: &'static str },
    /// An operation was attempted against inconsistent emulator state.
    Precondition(String),
    /// A scenario falls outside the assumption envelope of the specialized
    /// closed form (which is only valid when any flow containing a
    /// non-weakest-type malicious device is guaranteed to be detected).
    EnvelopeViolation(String),
    /// A conditional probability was requested but the conditioning event has
    /// probability zero (e.g. detection given malicious when `malicious_prob`
    /// is zero).
    EmptyConditioningSet,
    /// An unknown sweep parameter name.
    UnknownParameter(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::Capacity { needed, limit, what } => {
                write!(f, "capacity exceeded: {what} needs {needed}, limit is {limit}")
            }
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
            Error::EnvelopeViolation(msg) => {
                write!(f, "outside the specialized formula's assumption envelope: {msg}")
            }
            Error::EmptyConditioningSet => {
                write!(f, "undefined (empty conditioning set)")
            }
            Error::UnknownParameter(name) => write!(f, "unknown sweep parameter: {name}"),
        }
    }
}

impl core::error::Error for Error {}
