use thiserror::Error;

/// Errors raised by the polynomial, resolvent, census and geometry layers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("polynomial is inseparable (discriminant 0)")]
    Inseparable,

    #[error("polynomial is reducible over the rationals")]
    Reducible,

    #[error("input is not symmetric: transposition ({0} {1}) changes it")]
    NotSymmetric(usize, usize),

    #[error("orbit values collide: coset representatives {0} and {1} give the same value")]
    OrbitCollision(usize, usize),

    #[error("work budget exceeded: {required} units required, budget is {budget}")]
    Budget { required: u128, budget: u128 },

    #[error("resolvent exceeds the symbolic cost cap: {0}")]
    CostCap(String),

    #[error("no separating parameters found with entries bounded by {0}")]
    SearchExhausted(u64),

    #[error("substitution check failed: {0}")]
    Verification(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
