use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// A caller-supplied parameter violates an operation's precondition.
    #[error("parameter error: {0}")]
    Parameter(String),

    /// An exhaustive enumeration would exceed its size guard.
    #[error("size guard: {what} requires {actual}, limit is {limit}")]
    SizeGuard {
        what: String,
        limit: usize,
        actual: usize,
    },

    /// A randomized procedure did not converge within its budget.
    #[error("{what} did not converge within {rounds} rounds")]
    NonConvergence { what: String, rounds: u64 },

    /// The topological embedding router exhausted its restart budget.
    #[error("embedding failed after {restarts} restarts{}", stuck_edge.map(|(u, v)| format!(" (stuck on pattern edge {u}-{v})")).unwrap_or_default())]
    EmbeddingFailure {
        restarts: u32,
        stuck_edge: Option<(usize, usize)>,
    },

    /// The requested name is not in the fixture catalogue.
    #[error("unknown name: {0}")]
    UnknownName(String),

    /// A restriction does not cover some variable of the source system.
    #[error("dangling variable in restriction: {0}")]
    DanglingVariable(String),

    /// A variable map handed to an equivalence check is not a bijection
    /// between the two systems' variable tables.
    #[error("variable map mismatch: {0}")]
    MapMismatch(String),

    /// A certificate does not line up with the axioms it claims to refute.
    #[error("certificate index mismatch: {0}")]
    IndexMismatch(String),

    #[error("modulus {0} is not prime")]
    NonPrimeModulus(u64),

    /// Characteristic-2 runs must be requested explicitly.
    #[error("characteristic 2 requires the allow_char2 flag")]
    CharTwoNotAllowed,

    /// An iterative numeric routine ran out of iterations.
    #[error("numeric routine {0} failed to reach tolerance")]
    NumericNonConvergence(String),

    #[error("parse error in {context}: {message}")]
    Parse { context: String, message: String },

    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn parse(context: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            context: context.into(),
            message: message.into(),
        }
    }

    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
