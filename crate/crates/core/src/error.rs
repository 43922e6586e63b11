use num::BigInt;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected length {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("gram row {row} has length {len}, expected {rank}")]
    NotSquare { row: usize, len: usize, rank: usize },

    #[error("gram matrix is not symmetric at ({i}, {j})")]
    NotSymmetric { i: usize, j: usize },

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("unsupported classification: {0}")]
    UnsupportedClassification(String),

    #[error("no characteristic vector exists for this form")]
    NoCharacteristic,

    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    #[error("parity inconsistency: numerator {numerator} is odd")]
    Parity { numerator: BigInt },

    #[error("infeasible geometry: genus would be {genus}")]
    NegativeGenus { genus: BigInt },

    #[error("inconsistent geometry: polarization numerator {numerator} is odd")]
    InconsistentGeometry { numerator: BigInt },

    #[error("pair ({i}, {j}): {source}")]
    Reconstruction {
        i: usize,
        j: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("missing surface data for pair ({i}, {j})")]
    MissingPair { i: usize, j: usize },

    #[error("invalid pair key {0:?}")]
    InvalidPair(String),

    #[error("reconstruction needs at least one basis class")]
    EmptyBasis,

    #[error("negative genus {0} in surface data")]
    InvalidGenus(BigInt),

    #[error("surface is not immersed in chart {chart} at ({u}, {v})")]
    DegenerateSurface { chart: usize, u: f64, v: f64 },

    #[error("almost complex structure violates J^2 = -I (residual {residual:e})")]
    InvalidStructure { residual: f64 },

    #[error("surface is identically complex ({fraction:.3} of samples have vanishing defect)")]
    IdenticallyComplex { fraction: f64 },

    #[error("defect vanishes on the circle of radius {radius}")]
    RadiusUnusable { radius: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Stable machine-readable code used in CLI reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::NotSquare { .. } => "not_square",
            Error::NotSymmetric { .. } => "not_symmetric",
            Error::Parse { .. } => "parse",
            Error::UnsupportedClassification(_) => "unsupported_classification",
            Error::NoCharacteristic => "no_characteristic",
            Error::SizeLimit(_) => "size_limit",
            Error::Parity { .. } => "parity",
            Error::NegativeGenus { .. } => "infeasible_geometry",
            Error::InconsistentGeometry { .. } => "inconsistent_geometry",
            Error::Reconstruction { source, .. } => source.code(),
            Error::MissingPair { .. } => "missing_pair",
            Error::InvalidPair(_) => "invalid_pair",
            Error::EmptyBasis => "empty_basis",
            Error::InvalidGenus(_) => "invalid_genus",
            Error::DegenerateSurface { .. } => "degenerate_surface",
            Error::InvalidStructure { .. } => "invalid_structure",
            Error::IdenticallyComplex { .. } => "identically_complex",
            Error::RadiusUnusable { .. } => "radius_unusable",
            Error::InvalidArgument(_) => "invalid_argument",
        }
    }
}
