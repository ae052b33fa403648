use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Family/rank or space descriptor outside what is implemented.
    Unsupported(String),
    /// Bad label, bad parameters, malformed descriptor text.
    Invalid(String),
    SingularMatrix,
    /// A numeric result failed a residual or integrality gate.
    Residual { what: String, residual: f64 },
    /// A generated object contradicts one of the pinned ledger identities.
    PinnedMismatch(String),
    /// A solver did not converge or a claimed count did not materialize.
    ClaimCheck(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Unsupported(s) => write!(f, "unsupported: {s}"),
            Error::Invalid(s) => write!(f, "invalid input: {s}"),
            Error::SingularMatrix => write!(f, "singular matrix"),
            Error::Residual { what, residual } => {
                write!(f, "residual too large in {what}: {residual:.3e}")
            }
            Error::PinnedMismatch(s) => write!(f, "pinned identity violated: {s}"),
            Error::ClaimCheck(s) => write!(f, "claim check failed: {s}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
