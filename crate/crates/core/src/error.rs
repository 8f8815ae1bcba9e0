use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("square root of a negative number: {0}")]
    NegativeSquareRoot(String),

    #[error("tuple has no nonzero entry")]
    AllZeroTuple,

    #[error("variable `{0}` has no assigned value")]
    MissingVariable(String),

    #[error("cannot parse polynomial `{input}`: {reason}")]
    Parse { input: String, reason: String },

    #[error("singular Weierstrass model (discriminant is zero)")]
    SingularCurve,

    #[error("point {0} does not lie on the curve")]
    NotOnCurve(String),

    #[error("point {0} does not lie on the quartic model")]
    NotOnQuartic(String),

    #[error("invalid quartic model: {0}")]
    InvalidQuartic(String),

    /// A parameter choice makes some quantity vanish; `factor` names it.
    #[error("degenerate input: {factor} vanishes{}", detail_suffix(.detail))]
    Degenerate { factor: String, detail: String },

    #[error("identity check failed: {0}")]
    IdentityFailed(String),

    #[error("{0}")]
    InvalidArgument(String),
}

fn detail_suffix(detail: &str) -> String {
    if detail.is_empty() {
        String::new()
    } else {
        format!(" ({detail})")
    }
}

impl Error {
    pub(crate) fn degenerate(factor: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Degenerate {
            factor: factor.into(),
            detail: detail.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
