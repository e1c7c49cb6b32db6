use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("span of {size} codewords exceeds the enumeration cutoff {cutoff}")]
    CutoffExceeded { size: u128, cutoff: u128 },
    #[error("state of {size} amplitudes exceeds the simulator limit {limit}")]
    SizeExceeded { size: u128, limit: u128 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("inexact MacWilliams division at weight {weight}")]
    NonIntegerResult { weight: usize },
    #[error("no gate in M_{d}^{m}: {reason}")]
    EmptySet {
        d: u32,
        m: u32,
        reason: &'static str,
    },
    #[error("{what} = {value} outside the domain {domain}")]
    Domain {
        what: &'static str,
        value: f64,
        domain: &'static str,
    },
    #[error("no threshold crossing found in ({lo}, {hi})")]
    NoRoot { lo: f64, hi: f64 },
    #[error("target not reached within {rounds} rounds (final error {epsilon})")]
    NotConverged { rounds: usize, epsilon: f64 },
    #[error("invalid code: {0}")]
    InvalidCode(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("integer overflow computing {0}")]
    Overflow(&'static str),
}
