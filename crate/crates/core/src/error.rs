use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("not a root: {0:?}")]
    NotARoot(Vec<i64>),

    #[error("invalid root datum: {0}")]
    InvalidRootDatum(String),

    #[error("invalid Levi selection: {0}")]
    InvalidLevi(String),

    #[error("Weyl group exceeds cap of {cap} elements")]
    WeylCapExceeded { cap: usize },

    #[error("singular on integral system: root {0:?} pairs to zero")]
    SingularOnIntegralSystem(Vec<i64>),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("unknown label {0:?}")]
    UnknownLabel(String),

    #[error("unknown simple index {0}")]
    UnknownSimple(String),

    #[error("simple-set collision on {0:?}")]
    SimpleCollision(String),

    #[error("block is not valid: {0}")]
    InvalidBlock(String),

    #[error("duality system inconsistent or non-unique: {0}")]
    DualityUnsolvable(String),

    #[error("no solution under degree bound: {0}")]
    NoSelfDualSolution(String),

    #[error("M not unitriangular: {0}")]
    NotUnitriangular(String),

    #[error("coefficient out of range")]
    CoefficientOutOfRange,

    #[error("domain mismatch: {0}")]
    DomainMismatch(String),

    #[error("preconditions not established: {0}")]
    PreconditionsNotEstablished(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
