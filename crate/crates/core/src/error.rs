use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("non-real input: {0}")]
    NonRealInput(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: u64, right: u64 },
    #[error("parity mismatch: size {size} is incompatible with type {family}")]
    ParityMismatch { size: u64, family: char },
    #[error("operation undefined on the empty partition")]
    EmptyPartition,
    #[error("brute-force bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("no unique dominance maximum for {0}")]
    NoMaximum(String),
    #[error("domain violation: {0}")]
    DomainViolation(String),
    #[error("invalid Lie type: {0}")]
    InvalidLieType(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("unsupported lattice preset {preset} for {lie_type}")]
    UnsupportedPreset { preset: String, lie_type: String },
    #[error("invalid lattice: {0}")]
    InvalidLattice(String),
    #[error("invalid variant: {0}")]
    InvalidVariant(String),
    #[error("value out of range: {0}")]
    RangeViolation(String),
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("invalid Levi decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("orbit tuples live on different factors")]
    FactorMismatch,
    #[error("{0} is not a classical type")]
    NonClassicalType(String),
    #[error("search ball is unbounded: {0}")]
    UnboundedBall(String),
    #[error("point cap of {cap} exceeded")]
    PointCapExceeded { cap: u64 },
}

impl Error {
    /// Stable machine-readable tag used in CLI error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parse(_) => "parse",
            Error::NonRealInput(_) => "non_real_input",
            Error::InvalidPartition(_) => "invalid_partition",
            Error::SizeMismatch { .. } => "size_mismatch",
            Error::ParityMismatch { .. } => "parity_mismatch",
            Error::EmptyPartition => "empty_partition",
            Error::BoundExceeded(_) => "bound_exceeded",
            Error::NoMaximum(_) => "no_maximum",
            Error::DomainViolation(_) => "domain_violation",
            Error::InvalidLieType(_) => "invalid_lie_type",
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::UnsupportedPreset { .. } => "unsupported_preset",
            Error::InvalidLattice(_) => "invalid_lattice",
            Error::InvalidVariant(_) => "invalid_variant",
            Error::RangeViolation(_) => "range_violation",
            Error::LengthMismatch { .. } => "length_mismatch",
            Error::InvalidDecomposition(_) => "invalid_decomposition",
            Error::FactorMismatch => "factor_mismatch",
            Error::NonClassicalType(_) => "non_classical_type",
            Error::UnboundedBall(_) => "unbounded_ball",
            Error::PointCapExceeded { .. } => "point_cap_exceeded",
        }
    }
}
