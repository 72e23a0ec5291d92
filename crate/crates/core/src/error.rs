use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cyclotomic conductor must be at least 1, got {0}")]
    InvalidConductor(i64),

    #[error("division by zero")]
    DivisionByZero,

    #[error("degenerate discriminant: r^2 + 4s = 0")]
    DegenerateDiscriminant,

    #[error("polynomial division leaves a nonzero remainder")]
    InexactDivision,

    #[error("parameter {0} must be nonzero")]
    ZeroParameter(&'static str),

    #[error("section modulus m must be at least 1, got {0}")]
    InvalidModulus(i64),

    #[error("section part l = {l} is outside [0, {m}-1]")]
    InvalidPart { m: i64, l: i64 },

    #[error("index must be non-negative, got {0}")]
    NegativeIndex(i64),

    #[error("generating function denominator has zero constant term")]
    ZeroConstantTerm,

    #[error("polynomial has a coefficient at degree {degree} of the wrong parity for index {index}")]
    ParityMismatch { index: i64, degree: usize },

    #[error("malformed fixture line {line}: {text:?}")]
    MalformedFixture { line: usize, text: String },

    #[error("fixture {0} unavailable")]
    FixtureUnavailable(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
