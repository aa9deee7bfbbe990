use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid strand count {0}")]
    InvalidStrandCount(usize),
    #[error("generator index {index} out of range for n={n}")]
    IndexOutOfRange { n: usize, index: i64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("chain of length {k} does not fit in genus {g}")]
    ChainTooLong { g: usize, k: usize },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("class is not primitive")]
    NotPrimitive,
    #[error("intersection pattern violated: {0}")]
    IntersectionPatternViolated(String),
    #[error("matrix does not preserve the pairing")]
    NotSymplectic,
    #[error("matrix does not commute with the representation")]
    NotCommuting,
    #[error("relation check failed: {0}")]
    RelationCheckFailed(String),
    #[error("image count mismatch: expected {expected}, got {got}")]
    ImageCountMismatch { expected: usize, got: usize },
    #[error("projections differ at generator {0}")]
    ProjectionsDiffer(usize),
    #[error("defects are not all equal")]
    DefectsNotEqual,
    #[error("representation does not lift: {0}")]
    NotLiftable(String),
    #[error("parameters violate the L-group invariants: {0}")]
    InvalidParams(String),
    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("spectrum map is not equivariant")]
    NotEquivariant,
    #[error("orbit size {orbit} is not a multiple of {binom}")]
    OrbitSizeNotMultiple { orbit: usize, binom: usize },
    #[error("graph is not connected")]
    NotConnected,
    #[error("action is not transitive on edges")]
    NotEdgeTransitive,
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("out of domain: {0}")]
    OutOfDomain(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
