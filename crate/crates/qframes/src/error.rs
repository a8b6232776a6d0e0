//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),
    #[error("matrix is singular to tolerance {eps}")]
    Singular { eps: f64 },
    #[error("column {index} is linearly dependent on the columns before it")]
    DependentColumn { index: usize },
    #[error("cannot produce {want} orthonormal columns in dimension {dim}")]
    ExtensionOverflow { want: usize, dim: usize },
    #[error("{0}")]
    InvalidArgument(String),
    #[error("entries violate the {expected} subfield constraint at ({row}, {col})")]
    SubfieldViolation { expected: &'static str, row: usize, col: usize },
    #[error("frame is not tight (operator defect {defect:.3e})")]
    NotTight { defect: f64 },
    #[error("vector {index} is not unit norm (|v|^2 = {norm_sq})")]
    NotUnitNorm { index: usize, norm_sq: f64 },
    #[error("matrix {index} is not an orthogonal projection of rank {rank} (defect {defect:.3e})")]
    NotProjection { index: usize, rank: usize, defect: f64 },
    #[error("unknown catalog entry {0:?}")]
    UnknownCatalog(String),
    #[error("catalog parameter out of domain: {0}")]
    BadCatalogParameter(String),
    #[error("generator {index} is not unitary (defect {defect:.3e})")]
    NonUnitaryGenerator { index: usize, defect: f64 },
    #[error("group closure exceeded the cap of {cap} elements")]
    ClosureCapExceeded { cap: usize },
    #[error("group element match is ambiguous: candidates {a} and {b}")]
    AmbiguousElement { a: usize, b: usize },
    #[error("search exceeded the cap of {cap} nodes")]
    SearchCapExceeded { cap: usize },
    #[error("phase system has no null direction (residual {residual:.3e}); the map is not a symmetry")]
    PhaseInconsistent { residual: f64 },
    #[error("phase system is underdetermined (null space dimension >= 2); supply more triples")]
    PhaseUnderdetermined,
    #[error("no sign pattern yields a unitary mapping every vector onto its target line")]
    NoUnitaryLift,
    #[error("file format error: {0}")]
    Format(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
