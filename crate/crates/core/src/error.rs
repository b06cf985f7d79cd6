use thiserror::Error;

/// Errors raised by the algebra, engines and harness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient mismatch: {left} variables vs {right} variables")]
    AmbientMismatch { left: usize, right: usize },

    #[error("exponent overflow")]
    Overflow,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid parameters: {0}")]
    Parameter(String),

    #[error("no (t0, alpha) solution for n={n}, m={m}")]
    NoColonSolution { n: u32, m: u32 },

    #[error("the unit ideal has no quotient to measure")]
    UnitIdeal,

    #[error("operation undefined on the zero ideal")]
    ZeroIdeal,

    #[error("{what} has size {size}, above the cap {cap}")]
    CapExceeded { what: &'static str, size: usize, cap: usize },

    #[error("search budget of {budget} nodes exhausted")]
    Budget { budget: u64 },

    #[error("time cap reached")]
    Timeout,

    #[error("unknown claim id `{0}`")]
    UnknownClaim(String),
}

impl Error {
    /// Budget and cap exhaustion are resource limits, never mathematical answers.
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::Budget { .. } | Error::Timeout | Error::CapExceeded { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
