use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("pole of {function} at {at}")]
    Pole { function: &'static str, at: String },

    #[error("domain error in {function}: {reason}")]
    Domain { function: &'static str, reason: String },

    #[error("{function} diverges: {reason}")]
    Divergent { function: &'static str, reason: String },

    #[error("branch point of {function} at {at}")]
    BranchPoint { function: &'static str, at: String },

    #[error("degenerate input to {function}: {reason}")]
    Degenerate { function: &'static str, reason: String },

    #[error("{function} did not converge after {terms} terms")]
    NonConvergence { function: &'static str, terms: usize },

    #[error("overflow in {function}")]
    Overflow { function: &'static str },

    #[error("quadrature budget of {budget} evaluations exhausted (estimate {re}{im:+}i, error {est_error:e})")]
    BudgetExhausted {
        budget: usize,
        re: f64,
        im: f64,
        est_error: f64,
    },

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("bad parameters: {0}")]
    Params(String),
}

impl Error {
    pub(crate) fn domain(function: &'static str, reason: impl Into<String>) -> Self {
        Error::Domain {
            function,
            reason: reason.into(),
        }
    }

    pub(crate) fn divergent(function: &'static str, reason: impl Into<String>) -> Self {
        Error::Divergent {
            function,
            reason: reason.into(),
        }
    }

    /// True for the error kinds that mean "outside the admissible region" rather than a failure.
    pub fn is_domain_like(&self) -> bool {
        matches!(
            self,
            Error::Pole { .. }
                | Error::Domain { .. }
                | Error::BranchPoint { .. }
                | Error::Degenerate { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
