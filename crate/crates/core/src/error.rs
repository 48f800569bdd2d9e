use thiserror::Error;

/// Every failure the engine can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("group closure exceeded the cap of {cap} elements")]
    ClosureCapExceeded { cap: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("point {point} is outside the domain of degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("group is not transitive")]
    NotTransitive,
    #[error("bad constructor input: {0}")]
    BadConstructorInput(String),
    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),
    #[error("matrix set is not closed under multiplication")]
    NotClosed,
    #[error("order {order} exceeds the isomorphism-test limit of {limit}")]
    OrderTooLarge { order: usize, limit: usize },
    #[error("ratio {ratio} is outside the range required by this check")]
    PreconditionRatio { ratio: String },
    #[error("bad tau input: {0}")]
    BadTauInput(String),
    #[error("quadratic-form preconditions failed: {0}")]
    NotExtraspecialShape(String),
    #[error("subgroup is not regular: {0}")]
    NotRegular(String),
    #[error("ambient group equals the regular subgroup")]
    NotProper,
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("line {line}, entry {name:?}: {reason}")]
    Validation {
        line: usize,
        name: String,
        reason: String,
    },
    #[error("bad expression: {0}")]
    Expression(String),
}

pub type Result<T> = std::result::Result<T, Error>;
