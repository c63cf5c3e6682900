use thiserror::Error;

/// Errors raised while building instances, computing bounds, or solving.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("coefficient list is empty")]
    EmptyCoefficients,
    #[error("polynomial has no nonzero coefficient")]
    ZeroPolynomial,
    #[error("non-finite coefficient or parameter")]
    NonFinite,
    #[error("polynomial has degree zero")]
    DegreeZero,
    #[error("invalid harmonic polynomial: {0}")]
    InvalidHarmonic(String),
    #[error("invalid trinomial: {0}")]
    InvalidTrinomial(String),
    #[error("case mismatch: {0}")]
    CaseMismatch(String),
    #[error("invalid bracket [{lo}, {hi}]: no sign change")]
    InvalidBracket { lo: f64, hi: f64 },
    #[error("no convergence after {iterations} iterations")]
    NoConvergence { iterations: usize },
    #[error("invalid solver configuration: {0}")]
    InvalidConfig(String),
    #[error("found {found} distinct zeros, more than the capacity {capacity}")]
    CapacityExceeded { found: usize, capacity: usize },
    #[error("zero on contour: min |f| = {min_modulus:e} on radius {radius:e}")]
    ZeroOnContour { radius: f64, min_modulus: f64 },
    #[error("winding value {value} is not close to an integer")]
    NonIntegerWinding { value: f64 },
    #[error("singular zero present at {re} + {im}i")]
    SingularZeroPresent { re: f64, im: f64 },
    #[error("winding number {winding} does not match signed zero count {signed}")]
    Mismatch { winding: i64, signed: i64 },
}

impl Error {
    /// Short stable name, printed by the CLI on stderr.
    pub fn name(&self) -> &'static str {
        match self {
            Error::EmptyCoefficients => "EmptyCoefficients",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::NonFinite => "NonFinite",
            Error::DegreeZero => "DegreeZero",
            Error::InvalidHarmonic(_) => "InvalidHarmonic",
            Error::InvalidTrinomial(_) => "InvalidTrinomial",
            Error::CaseMismatch(_) => "CaseMismatch",
            Error::InvalidBracket { .. } => "InvalidBracket",
            Error::NoConvergence { .. } => "NoConvergence",
            Error::InvalidConfig(_) => "InvalidConfig",
            Error::CapacityExceeded { .. } => "CapacityExceeded",
            Error::ZeroOnContour { .. } => "ZeroOnContour",
            Error::NonIntegerWinding { .. } => "NonIntegerWinding",
            Error::SingularZeroPresent { .. } => "SingularZeroPresent",
            Error::Mismatch { .. } => "Mismatch",
        }
    }

    /// Errors that come from the numerical solver rather than from the input.
    pub fn is_solver_error(&self) -> bool {
        matches!(
            self,
            Error::NoConvergence { .. }
                | Error::CapacityExceeded { .. }
                | Error::ZeroOnContour { .. }
                | Error::NonIntegerWinding { .. }
                | Error::SingularZeroPresent { .. }
                | Error::Mismatch { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
