use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("group order exceeds the enumeration cap of {cap} elements")]
    OrderLimitExceeded { cap: usize },
    #[error("unknown polytope `{0}`")]
    UnknownPolytope(String),
    #[error("polytope dataset is corrupt: {0}")]
    DatasetCorrupt(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("interpolation produced the non-integer coefficient {coefficient} at degree {degree}")]
    NonIntegerCoefficients { degree: usize, coefficient: String },
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("classes of the same type carry different coefficients: {0}")]
    InconsistentType(String),
    #[error("validation failed: {0}")]
    ValidationFailed(String),
    #[error("unsupported field order q = {0}")]
    UnsupportedField(u64),
    #[error("subset is not a subgroup")]
    NotASubgroup,
    #[error("brute-force guard tripped: {0}")]
    SizeGuard(String),
    #[error("generator index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
