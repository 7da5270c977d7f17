//! Empirical convergence sweeps and log2-slope regression.
//!
//! Derivative jumps decay like 1/2^i and exterior angles like the square
//! root of that (an upper bound; smooth regular curves usually show a full
//! 1/2^i). Sweeps measure the per-depth maxima and fit a least-squares
//! slope in log2 space.

use crate::bezier::BezierCurve;
use crate::certify::level_angle_summary;
use crate::error::{Error, Result};
use crate::segment::point_segment_distance;
use crate::subdivision::subdivide;

/// Angles below this are atan2 noise on near-parallel vectors and are
/// excluded from fits.
pub const ANGLE_FLOOR: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConvergenceMetric {
    MaxDerivativeJump,
    MaxExteriorAngle,
    MaxCosDefect,
    HausdorffEstimate,
}

impl ConvergenceMetric {
    pub fn name(&self) -> &'static str {
        match self {
            Self::MaxDerivativeJump => "max_derivative_jump",
            Self::MaxExteriorAngle => "max_exterior_angle",
            Self::MaxCosDefect => "max_cos_defect",
            Self::HausdorffEstimate => "hausdorff_estimate",
        }
    }
}

/// One metric swept over a depth range, with its fitted decay rate.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceReport {
    pub metric: ConvergenceMetric,
    /// Depths whose values entered the fit (strictly increasing).
    pub depths: Vec<u32>,
    /// Positive per-depth values, aligned with `depths`.
    pub values: Vec<f64>,
    /// Depth/value pairs excluded from the fit (zero or below the noise
    /// floor).
    pub excluded: Vec<(u32, f64)>,
    /// Max junction angle per swept depth, tracked apart from the
    /// piece-interior angles the decay bound covers. Populated by the
    /// exterior-angle sweep.
    pub junction_values: Option<Vec<(u32, f64)>>,
    pub log2_slope: f64,
    pub slope_ci_halfwidth: f64,
    pub fit_residual: f64,
}

/// Least-squares slope of `log2(value)` against depth.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlopeFit {
    pub slope: f64,
    /// 95% half-width from the slope's standard error with a Student-t
    /// multiplier.
    pub ci_halfwidth: f64,
    /// RMS of the fit errors in log2 space.
    pub residual: f64,
    /// Nonpositive values dropped before fitting.
    pub excluded_count: usize,
}

/// Ordinary least squares of `log2(values)` on `depths`.
///
/// Nonpositive values are excluded (and counted); at least three usable
/// points are required.
pub fn fit_log2_slope(depths: &[u32], values: &[f64]) -> Result<SlopeFit> {
    assert_eq!(depths.len(), values.len());
    let usable: Vec<(f64, f64)> = depths
        .iter()
        .zip(values)
        .filter(|(_, v)| **v > 0.0)
        .map(|(d, v)| (*d as f64, v.log2()))
        .collect();
    let excluded_count = values.len() - usable.len();
    let n = usable.len();
    if n < 3 {
        return Err(Error::TooFewFitPoints { usable: n });
    }

    let nf = n as f64;
    let mean_x = usable.iter().map(|(x, _)| x).sum::<f64>() / nf;
    let mean_y = usable.iter().map(|(_, y)| y).sum::<f64>() / nf;
    let sxx: f64 = usable.iter().map(|(x, _)| (x - mean_x).powi(2)).sum();
    let sxy: f64 = usable.iter().map(|(x, y)| (x - mean_x) * (y - mean_y)).sum();
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;

    let sse: f64 = usable
        .iter()
        .map(|(x, y)| (y - (intercept + slope * x)).powi(2))
        .sum();
    let residual = (sse / nf).sqrt();
    let df = n - 2;
    let ci_halfwidth = if df == 0 {
        f64::INFINITY
    } else {
        let se = (sse / df as f64 / sxx).sqrt();
        student_t_975(df) * se
    };

    Ok(SlopeFit { slope, ci_halfwidth, residual, excluded_count })
}

fn student_t_975(df: usize) -> f64 {
    use statrs::distribution::{ContinuousCDF, StudentsT};
    StudentsT::new(0.0, 1.0, df as f64)
        .expect("df >= 1")
        .inverse_cdf(0.975)
}

fn check_sweep_range(i_min: u32, i_max: u32) -> Result<()> {
    if i_min >= i_max {
        return Err(Error::IndexOutOfRange { index: i_min as usize, len: i_max as usize });
    }
    Ok(())
}

fn assemble_report(
    metric: ConvergenceMetric,
    raw: Vec<(u32, f64)>,
    floor: f64,
    junction_values: Option<Vec<(u32, f64)>>,
) -> Result<ConvergenceReport> {
    if raw.iter().all(|(_, v)| *v == 0.0) {
        return Err(Error::DegenerateMetric);
    }
    let mut depths = Vec::new();
    let mut values = Vec::new();
    let mut excluded = Vec::new();
    for (d, v) in raw {
        if v > 0.0 && v >= floor {
            depths.push(d);
            values.push(v);
        } else {
            excluded.push((d, v));
        }
    }
    let fit = fit_log2_slope(&depths, &values)?;
    Ok(ConvergenceReport {
        metric,
        depths,
        values,
        excluded,
        junction_values,
        log2_slope: fit.slope,
        slope_ci_halfwidth: fit.ci_halfwidth,
        fit_residual: fit.residual,
    })
}

/// Max derivative jump over all pieces and interior vertices, per depth.
/// Expected slope is about -1.
pub fn sweep_derivative_jumps(
    curve: &BezierCurve,
    i_min: u32,
    i_max: u32,
) -> Result<ConvergenceReport> {
    check_sweep_range(i_min, i_max)?;
    let n = curve.degree();
    if n < 2 {
        return Err(Error::DegreeTooLow { required: 2, actual: n });
    }
    let mut raw = Vec::new();
    for depth in i_min..=i_max {
        let level = subdivide(curve, depth)?;
        let mut max_jump: f64 = 0.0;
        for piece in level.pieces() {
            let pts = piece.control_points();
            let scale = n as f64 * 2f64.powi(depth as i32);
            for m in 1..n {
                let second = pts[m + 1] - pts[m] * 2.0 + pts[m - 1];
                max_jump = max_jump.max(scale * second.norm());
            }
        }
        raw.push((depth, max_jump));
    }
    assemble_report(ConvergenceMetric::MaxDerivativeJump, raw, 0.0, None)
}

/// Max exterior angle over all pieces' control polygons, per depth; junction
/// angles are tracked separately. The proved upper bound gives slope at most
/// -1/2; smooth regular curves usually show -1.
pub fn sweep_exterior_angles(
    curve: &BezierCurve,
    i_min: u32,
    i_max: u32,
) -> Result<ConvergenceReport> {
    check_sweep_range(i_min, i_max)?;
    let n = curve.degree();
    if n < 2 {
        return Err(Error::DegreeTooLow { required: 2, actual: n });
    }
    let mut raw = Vec::new();
    let mut junctions = Vec::new();
    for depth in i_min..=i_max {
        let level = subdivide(curve, depth)?;
        let summary = level_angle_summary(&level)?;
        raw.push((depth, summary.max_piece_angle));
        junctions.push((depth, summary.max_junction_angle));
    }
    assemble_report(ConvergenceMetric::MaxExteriorAngle, raw, ANGLE_FLOOR, Some(junctions))
}

/// Max of `1 - cos(α)` over piece-interior angles, per depth; computed as
/// `2·sin²(α/2)` to survive small angles. Expected slope is twice the angle
/// slope.
pub fn sweep_cos_defect(curve: &BezierCurve, i_min: u32, i_max: u32) -> Result<ConvergenceReport> {
    check_sweep_range(i_min, i_max)?;
    let n = curve.degree();
    if n < 2 {
        return Err(Error::DegreeTooLow { required: 2, actual: n });
    }
    let mut raw = Vec::new();
    for depth in i_min..=i_max {
        let level = subdivide(curve, depth)?;
        let summary = level_angle_summary(&level)?;
        let a = summary.max_piece_angle;
        let defect = 2.0 * (a / 2.0).sin().powi(2);
        // Exclude via the angle floor so both angle sweeps drop the same
        // depths.
        raw.push((depth, if a >= ANGLE_FLOOR { defect } else { 0.0 }));
    }
    assemble_report(ConvergenceMetric::MaxCosDefect, raw, 0.0, None)
}

/// Symmetric Hausdorff distance between a dense curve sampling and the
/// depth-`i` level polyline.
///
/// Both directions run nearest-point-on-segment searches: curve samples
/// against polyline edges, then polyline vertices against the sampled curve
/// treated as a fine polyline. The result is an estimate with sampling error
/// O(1/samples), not a certified bound.
pub fn hausdorff_estimate(curve: &BezierCurve, depth_i: u32, samples: usize) -> Result<f64> {
    if samples < 100 {
        return Err(Error::TooFewPoints { required: 100, actual: samples });
    }
    let polyline = subdivide(curve, depth_i)?.polyline()?;
    let verts = polyline.vertices();

    let mut curve_points = Vec::with_capacity(samples);
    for j in 0..samples {
        let t = j as f64 / (samples - 1) as f64;
        curve_points.push(curve.evaluate(t)?);
    }

    let mut forward: f64 = 0.0;
    for p in &curve_points {
        let mut min_d = f64::INFINITY;
        for w in verts.windows(2) {
            min_d = min_d.min(point_segment_distance(*p, w[0], w[1]));
            if min_d == 0.0 {
                break;
            }
        }
        forward = forward.max(min_d);
    }

    let mut backward: f64 = 0.0;
    for v in verts {
        let mut min_d = f64::INFINITY;
        for w in curve_points.windows(2) {
            min_d = min_d.min(point_segment_distance(*v, w[0], w[1]));
            if min_d == 0.0 {
                break;
            }
        }
        backward = backward.max(min_d);
    }

    Ok(forward.max(backward))
}

/// Hausdorff estimates swept over a depth range, fit like the other metrics.
pub fn sweep_hausdorff(
    curve: &BezierCurve,
    i_min: u32,
    i_max: u32,
    samples: usize,
) -> Result<ConvergenceReport> {
    check_sweep_range(i_min, i_max)?;
    let mut raw = Vec::new();
    for depth in i_min..=i_max {
        raw.push((depth, hausdorff_estimate(curve, depth, samples)?));
    }
    assemble_report(ConvergenceMetric::HausdorffEstimate, raw, 0.0, None)
}
