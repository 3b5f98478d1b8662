use thiserror::Error;

/// Errors raised by the exact kernel and the sequence generators.
///
/// Several variants can only fire on an implementation defect: the sequence is
/// integral and every recursion step divides exactly, so `NonZeroRemainder` or
/// `NotIntegral` coming out of a generator is a bug, not a recoverable state.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial division left a nonzero remainder")]
    NonZeroRemainder,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("value is not an integer: {0}")]
    NotIntegral(String),

    #[error("P_{n} has degree {found:?}, expected {expected}")]
    Degree {
        n: i64,
        expected: usize,
        found: Option<usize>,
    },

    #[error("closed forms disagree at n={n}, k={k}: {detail}")]
    FormMismatch { n: i64, k: i64, detail: String },

    #[error("need {needed} sample points, only {available} available")]
    InsufficientSamples { needed: usize, available: usize },

    #[error("fitted polynomial misses holdout point n={n}")]
    HoldoutResidual { n: i64 },

    #[error("i/o error: {0}")]
    Io(String),

    #[error("malformed record: {0}")]
    Parse(String),

    #[error("at n={n}: {source}")]
    AtIndex {
        n: i64,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn at(self, n: i64) -> Self {
        Error::AtIndex {
            n,
            source: Box::new(self),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
