//! Structured error type shared by every module of the crate.

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Every fallible operation in the crate reports one of these variants.
///
/// The variants are split into three broad classes which the CLI maps to
/// exit codes: malformed input (`NotPure`, `InvalidFace`, ...), resource
/// caps (`BudgetExceeded`, `LatticeTooLarge`, ...), and violated
/// mathematical hypotheses (`HypothesisFailed`, `LozengeViolated`, ...).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("complex is not pure: {0}")]
    NotPure(String),

    #[error("invalid face: {0}")]
    InvalidFace(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("minor size exceeds matrix row count: r={r}, n={n}")]
    MinorTooLarge { r: usize, n: usize },

    #[error("minor rank exceeds matrix row count: r={r}, n={n}")]
    RankTooLarge { r: usize, n: usize },

    #[error("operation requires a different (r, n) shape: {0}")]
    WrongShape(String),

    #[error("two maximal cliques share more than n-1 vertices: {0}")]
    LozengeViolated(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("poset is not bounded: {0}")]
    NotBounded(String),

    #[error("reduction budget of {0} steps exceeded")]
    BudgetExceeded(u64),

    #[error("lcm lattice grew past {0} elements, exceeding the configured cap")]
    LatticeTooLarge(usize),

    #[error("betti oracle refused an ideal with {0} generators (cap exceeded)")]
    OracleTooLarge(usize),

    #[error("complex enumeration exceeded the configured cap at {0} faces")]
    ComplexTooLarge(usize),

    #[error("hypothesis not satisfied: {0}")]
    HypothesisFailed(String),

    #[error("differential fails d∘d = 0: {0}")]
    DifferentialBroken(String),

    #[error("term order is not diagonal for this matrix shape: {0}")]
    NotDiagonal(String),
}

impl Error {
    /// Process exit code used by the command-line interface:
    /// 2 for input/usage errors, 3 for exceeded budgets or caps.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::BudgetExceeded(_)
            | Error::LatticeTooLarge(_)
            | Error::OracleTooLarge(_)
            | Error::ComplexTooLarge(_) => 3,
            _ => 2,
        }
    }
}
