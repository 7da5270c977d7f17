//! Error types shared by all modules.

use std::fmt;

/// Errors produced by curve construction, evaluation, subdivision and
/// certification.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A coordinate was NaN or infinite.
    NonFiniteCoordinate,
    /// A curve parameter fell outside `[0, 1]`.
    ParameterOutOfRange(f64),
    /// An operation required a higher-degree curve.
    DegreeTooLow { required: usize, actual: usize },
    /// Too few points to form the requested object.
    TooFewPoints { required: usize, actual: usize },
    /// Too few vertices for an angle computation.
    TooFewVertices { required: usize, actual: usize },
    /// `‖C'(t)‖` fell below the regularity cutoff where a curvature or
    /// tangent was needed.
    NearSingular { t: f64, derivative_norm: f64 },
    /// Adaptive quadrature hit its panel cap before reaching the tolerance.
    QuadratureDidNotConverge { panels_used: usize },
    /// Subdividing to `depth` would exceed the configured memory cap.
    MemoryCapExceeded { depth: u32, points: u128, cap: u64 },
    /// Vertex or value index outside the valid range.
    IndexOutOfRange { index: usize, len: usize },
    /// A tolerance or epsilon argument was not strictly positive and finite.
    InvalidTolerance(f64),
    /// A closed-curve operation was applied to geometry that does not close.
    NotClosed { gap: f64 },
    /// Every swept value was zero, so no rate can be fit (straight lines).
    DegenerateMetric,
    /// Fewer than three positive values were available for a slope fit.
    TooFewFitPoints { usable: usize },
    /// A simplicity certificate was issued but the brute-force oracle found
    /// an intersection. This signals an implementation bug and is never
    /// swallowed.
    CertificateOracleConflict {
        depth: u32,
        edge_a: usize,
        edge_b: usize,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NonFiniteCoordinate => write!(f, "coordinate is NaN or infinite"),
            Self::ParameterOutOfRange(t) => {
                write!(f, "parameter t = {} outside [0, 1]", t)
            }
            Self::DegreeTooLow { required, actual } => {
                write!(f, "curve degree {} below required {}", actual, required)
            }
            Self::TooFewPoints { required, actual } => {
                write!(f, "{} points given, {} required", actual, required)
            }
            Self::TooFewVertices { required, actual } => {
                write!(f, "{} vertices given, {} required", actual, required)
            }
            Self::NearSingular { t, derivative_norm } => write!(
                f,
                "derivative norm {} at t = {} is below the regularity cutoff",
                derivative_norm, t
            ),
            Self::QuadratureDidNotConverge { panels_used } => write!(
                f,
                "quadrature did not reach tolerance after {} panels",
                panels_used
            ),
            Self::MemoryCapExceeded { depth, points, cap } => write!(
                f,
                "depth {} needs {} control points, exceeding the cap of {}",
                depth, points, cap
            ),
            Self::IndexOutOfRange { index, len } => {
                write!(f, "index {} out of range for length {}", index, len)
            }
            Self::InvalidTolerance(v) => {
                write!(f, "tolerance {} must be positive and finite", v)
            }
            Self::NotClosed { gap } => {
                write!(f, "curve endpoints differ by {}; not a closed loop", gap)
            }
            Self::DegenerateMetric => {
                write!(f, "all swept values are zero; nothing to fit")
            }
            Self::TooFewFitPoints { usable } => {
                write!(f, "slope fit needs at least 3 positive values, got {}", usable)
            }
            Self::CertificateOracleConflict { depth, edge_a, edge_b } => write!(
                f,
                "certificate issued at depth {} but oracle found edges {} and {} \
                 intersecting (implementation bug)",
                depth, edge_a, edge_b
            ),
        }
    }
}

impl std::error::Error for Error {}

/// Result type used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
