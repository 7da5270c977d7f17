//! Bezier subdivision geometry with machine-checkable certificates.
//!
//! The library subdivides Bezier curves by repeated de Casteljau midpoint
//! splitting, measures how the exterior angles of the resulting PL
//! approximations decay, and turns the angle sums into certificates:
//!
//! - a level polyline whose piece and junction angle windows stay below π is
//!   certified non-self-intersecting;
//! - a simple closed polyline with total curvature at most 4π is certified
//!   unknotted.
//!
//! Both certificates are conservative: when the evidence is insufficient the
//! verdict is `Inconclusive`, never a claim of intersection or knottedness.
//! A brute-force segment-pair oracle cross-checks every certificate on
//! request, and the convergence module reproduces the expected decay rates
//! (1/2^i for discrete-derivative jumps, at worst sqrt(1/2^i) for angles)
//! by log2-slope regression.

pub mod angles;
pub mod bezier;
pub mod certify;
pub mod converge;
pub mod error;
pub mod fixtures;
pub mod intersect;
pub mod point;
pub mod polyline;
pub mod quadrature;
pub mod segment;
pub mod subdivision;

pub use angles::{
    discrete_derivative, derivative_jump, exterior_angles, exterior_angles_with_policy,
    pl_total_curvature, uniform_parametrization, AngleProfile, DegenerateAnglePolicy,
    DiscreteDerivative, UniformParametrization,
};
pub use bezier::{BezierCurve, RegularityReport};
pub use certify::{
    certify_simple, certify_simple_with, certify_unknotted, certify_unknotted_polyline,
    piece_angle_sum, total_curvature_arclen, JunctionMode, SimplicityCertificate,
    SimplicityVerdict, UnknotCertificate, UnknotVerdict, FM_MARGIN, PI_MARGIN,
    UNKNOT_THRESHOLD,
};
pub use converge::{
    fit_log2_slope, hausdorff_estimate, sweep_cos_defect, sweep_derivative_jumps,
    sweep_exterior_angles, sweep_hausdorff, ConvergenceMetric, ConvergenceReport, SlopeFit,
};
pub use error::{Error, Result};
pub use intersect::{
    brute_force_self_intersection, default_intersection_epsilon, IntersectionReport,
    IntersectionWitness,
};
pub use point::{BoundingBox, Point3};
pub use polyline::PLCurve;
pub use subdivision::{
    reconstruct_check, split_half, subdivide, subdivide_with_cap, DyadicFraction,
    SubdivisionLevel, SubdivisionPiece, DEFAULT_MEMORY_CAP,
};
