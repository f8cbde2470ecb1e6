use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed input: {0}")]
    MalformedInput(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("{what}: size {size} exceeds cap {cap}")]
    SizeCapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    /// The search ran out of budget. `lower..=upper` brackets the true value
    /// as far as the search got.
    #[error("budget exceeded; value bracketed in {lower}..={upper}")]
    BudgetExceeded { lower: usize, upper: usize },

    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("i/o error: {0}")]
    Io(String),

    /// An internal cross-check disagreed with the primary computation.
    #[error("internal cross-check failed: {0}")]
    CrossCheck(String),
}

impl Error {
    pub(crate) fn malformed(msg: impl Into<String>) -> Self {
        Error::MalformedInput(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::PreconditionViolated(msg.into())
    }

    pub(crate) fn cap(what: &'static str, size: usize, cap: usize) -> Self {
        Error::SizeCapExceeded { what, size, cap }
    }

    pub fn at_line(self, line: usize) -> Self {
        Error::AtLine {
            line,
            source: Box::new(self),
        }
    }

    /// Strips any line positioning and returns the underlying error.
    pub fn root(&self) -> &Error {
        match self {
            Error::AtLine { source, .. } => source.root(),
            other => other,
        }
    }

    pub fn is_budget(&self) -> bool {
        matches!(self.root(), Error::BudgetExceeded { .. })
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
