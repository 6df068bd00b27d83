use thiserror::Error;

use crate::rings::RingKind;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("partition does not cover the vertex set exactly once: {0}")]
    BadPartition(String),
    #[error("label arity mismatch: {0} vs {1}")]
    LabelMismatch(usize, usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("configuration does not extend the pinning at vertex {0}")]
    PinningConflict(usize),
    #[error("enumeration of {needed} configurations exceeds the budget of {budget}")]
    BudgetExceeded { needed: String, budget: u64 },
    #[error("tensor is not symmetric under coordinate permutation")]
    AsymmetricTensor,
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix has negative entries")]
    NegativeEntries,
    #[error("graph has parallel edges")]
    ParallelEdges,
    #[error("graph is not simple")]
    NotSimple,
    #[error("matrix is not tractable: {0}")]
    NotTractable(String),
    #[error("rank-1 factorization failed: {0}")]
    FactorizationFailure(String),
    #[error("input too large: {0}")]
    TooLarge(String),
    #[error("operation not supported over the {0} ring")]
    RingUnsupported(RingKind),
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(RingKind, RingKind),
    #[error("unsupported modulus: {0}")]
    UnsupportedModulus(String),
    #[error("matrix entries are not all powers of X")]
    NotPowerMatrix,
    #[error("oracle failure: {0}")]
    OracleFailure(String),
    #[error("no evaluation point found up to {0}")]
    DegeneratePoint(String),
    #[error("interpolation nodes are not pairwise distinct")]
    DuplicateNode,
    #[error("singular system: {0}")]
    SingularSystem(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable name, used in CLI error reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::BadParameter(_) => "BadParameter",
            Error::BadPartition(_) => "BadPartition",
            Error::LabelMismatch(..) => "LabelMismatch",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::PinningConflict(_) => "PinningConflict",
            Error::BudgetExceeded { .. } => "BudgetExceeded",
            Error::AsymmetricTensor => "AsymmetricTensor",
            Error::ArityMismatch { .. } => "ArityMismatch",
            Error::NotSymmetric => "NotSymmetric",
            Error::NegativeEntries => "NegativeEntries",
            Error::ParallelEdges => "ParallelEdges",
            Error::NotSimple => "NotSimple",
            Error::NotTractable(_) => "NotTractable",
            Error::FactorizationFailure(_) => "FactorizationFailure",
            Error::TooLarge(_) => "TooLarge",
            Error::RingUnsupported(_) => "RingUnsupported",
            Error::RingMismatch(..) => "RingMismatch",
            Error::UnsupportedModulus(_) => "UnsupportedModulus",
            Error::NotPowerMatrix => "NotPowerMatrix",
            Error::OracleFailure(_) => "OracleFailure",
            Error::DegeneratePoint(_) => "DegeneratePoint",
            Error::DuplicateNode => "DuplicateNode",
            Error::SingularSystem(_) => "SingularSystem",
            Error::Parse(_) => "Parse",
        }
    }
}
