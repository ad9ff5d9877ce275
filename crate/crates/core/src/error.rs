use thiserror::Error;

/// Errors raised anywhere in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("extension degree {0} outside the supported range 1..=16")]
    DegreeOutOfRange(usize),

    #[error("basis rows are linearly dependent")]
    DependentBasis,

    #[error("generator matrix has rank {rank} but {rows} rows")]
    RankDeficient { rows: usize, rank: usize },

    #[error("{what} exceeds the budget of {limit}")]
    BudgetExceeded { what: String, limit: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("the code has a zero coordinate at position {0}")]
    ZeroCoordinate(usize),

    #[error("point multiset is empty")]
    EmptyPointSet,

    #[error("point multiset has a point of multiplicity {0}; a set was required")]
    NotASet(u32),

    #[error("line is not tangent to the point set (meets it in {0} points)")]
    NotTangent(usize),

    #[error("switching precondition violated: {0}")]
    SwitchPrecondition(String),

    #[error("divisibility check failed: {0}")]
    Divisibility(String),

    #[error("word already lies in the code")]
    WordInCode,

    #[error("inconsistent weight distribution: {0}")]
    InconsistentDistribution(String),

    #[error("invalid partial spread: {0}")]
    InvalidSpread(String),

    #[error("length {n} is both realizable and excluded by the moment bound")]
    LengthContradiction { n: u64 },

    #[error("malformed record: {0}")]
    MalformedRecord(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
