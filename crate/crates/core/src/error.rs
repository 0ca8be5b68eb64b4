use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the library reports. Variant names follow the contract
/// names used throughout the crate so callers can match on them.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("field mismatch: Q(zeta_{left}) vs Q(zeta_{right})")]
    FieldMismatch { left: u64, right: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("global dimension is zero")]
    ZeroGlobalDimension,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("power iteration did not converge after {iterations} iterations")]
    NonConvergence { iterations: usize },
    #[error("label {0} is not an invertible class (its action matrix is not a permutation)")]
    NotInvertibleClass(String),
    #[error("the dimension character does not occur in Gr(M): no matched pivotal structure for these dimensions")]
    EmptyEigenspace,
    #[error("the dimension character occurs with multiplicity {multiplicity}; an explicit m-vector is required")]
    AmbiguousM { multiplicity: usize },
    #[error("m-vector entry {index} vanishes")]
    ZeroEntry { index: usize },
    #[error("candidate m-vector is not in the dimension eigenspace (label {label}, row {row})")]
    NotInEigenspace { label: String, row: usize },
    #[error("Q_M e_j / m_j depends on j (columns {first} and {second} disagree)")]
    JDependence { first: usize, second: usize },
    #[error("invalid twist: {0}")]
    InvalidTwist(String),
    #[error("N+ + N- differs from N for label {label} at ({row}, {col})")]
    SignSplitMismatch { label: String, row: usize, col: usize },
    #[error("value is not real, its sign is undefined: {0}")]
    NonRealSigns(String),
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("category has no dimensions")]
    MissingDims,
    #[error("kappa is not a character: kappa({a})kappa({b}) != kappa({a}{b})")]
    NotACharacter { a: usize, b: usize },
    #[error("subset is not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("unsupported symbolic form: {0}")]
    UnsupportedSymbolic(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("schema error: {0}")]
    Schema(String),
}

impl Error {
    /// True for failures caused by malformed or inconsistent input, as opposed
    /// to well-formed data that fails a mathematical check.
    pub fn is_input_error(&self) -> bool {
        !matches!(
            self,
            Error::EmptyEigenspace
                | Error::JDependence { .. }
                | Error::ZeroGlobalDimension
                | Error::NonConvergence { .. }
        )
    }
}
