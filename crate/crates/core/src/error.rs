use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("mismatched boundary: expected a set of size {expected}, found {found}")]
    MismatchedBoundary { expected: usize, found: usize },
    #[error("index {index} out of range for a finite set of size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("finite set of size {0} exceeds the limit of {max}", max = crate::finset::MAX_SET_SIZE)]
    SetTooLarge(usize),
    #[error("table of length {len} does not match a domain of size {dom}")]
    TableLength { len: usize, dom: usize },
    #[error("decoration does not live on an apex of size {apex}: {reason}")]
    CarrierViolation { apex: usize, reason: String },
    #[error("ambient dimension mismatch: expected {expected}, found {found}")]
    AmbientMismatch { expected: usize, found: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("not a canonical basis: {0}")]
    NotCanonical(String),
    #[error("edge labels must be positive, found {0}")]
    NonPositiveLabel(String),
    #[error("isomorphism search exceeded its budget of {0} visited nodes")]
    SearchBudgetExceeded(u64),
    #[error("law violation: {0}")]
    LawViolation(String),
}
