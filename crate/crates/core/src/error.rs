use thiserror::Error;

/// Errors shared across the crate. Budget exhaustion is always a distinct,
/// visible error value, never a silent fallback.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("rewriting budget exhausted after {steps} steps")]
    BudgetExceeded { steps: u64 },

    #[error("divisor enumeration did not close within budget")]
    NotClosed,

    #[error("{word:?} is not a divisor of the declared Garside element")]
    NotADivisor { word: String },

    #[error("word {word:?} does not reduce to a single generator")]
    NotAGenerator { word: String },

    #[error("no complement table declared for this presentation")]
    MissingComplement,

    #[error("complement entry missing for pair ({0}, {1})")]
    ComplementEntryMissing(String, String),

    #[error("invalid complement: {0}")]
    InvalidComplement(String),

    #[error("duplicate generator name {0:?}")]
    DuplicateGenerator(String),

    #[error("unknown generator {name:?} at line {line}, column {col}")]
    UnknownGenerator { name: String, line: usize, col: usize },

    #[error("syntax error at line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },

    #[error("duplicate section {0:?}")]
    DuplicateSection(String),

    #[error("unknown builtin {0:?}")]
    UnknownBuiltin(String),

    #[error("missing data: {0}")]
    MissingData(String),

    #[error("supplied images are not a homomorphism: relator {relator} is not trivial in quotient {quotient}")]
    RelatorViolated { quotient: String, relator: String },

    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
