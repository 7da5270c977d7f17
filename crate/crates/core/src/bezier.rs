//! Bezier curves: evaluation, hodographs, curvature, and regularity.
//!
//! Evaluation uses the de Casteljau pyramid rather than direct Bernstein
//! summation for numerical stability; the Bernstein sum survives only as a
//! test oracle.

use crate::error::{Error, Result};
use crate::point::{BoundingBox, Point3};
use crate::quadrature::adaptive_simpson;

/// A polynomial curve of degree `n` given by `n + 1` control points.
///
/// Degree-0 (constant) curves are admitted so that the hodograph chain stays
/// closed under differentiation; most operations require a higher degree and
/// say so.
#[derive(Debug, Clone, PartialEq)]
pub struct BezierCurve {
    control_points: Vec<Point3>,
}

impl BezierCurve {
    /// Builds a curve from its control points.
    ///
    /// Rejects empty input and non-finite coordinates.
    pub fn new(control_points: Vec<Point3>) -> Result<Self> {
        if control_points.is_empty() {
            return Err(Error::TooFewPoints { required: 1, actual: 0 });
        }
        for p in &control_points {
            p.check_finite()?;
        }
        Ok(Self { control_points })
    }

    pub fn control_points(&self) -> &[Point3] {
        &self.control_points
    }

    pub fn degree(&self) -> usize {
        self.control_points.len() - 1
    }

    pub fn bounding_box(&self) -> BoundingBox {
        BoundingBox::of(&self.control_points)
    }

    /// Scale-aware cutoff below which the derivative counts as vanishing.
    pub fn regularity_epsilon(&self) -> f64 {
        1e-9 * (self.bounding_box().diagonal() + 1.0)
    }

    /// Evaluates `C(t)` by the de Casteljau pyramid.
    ///
    /// At `t = 0` and `t = 1` the pyramid copies the first and last control
    /// points, so endpoint interpolation is exact.
    pub fn evaluate(&self, t: f64) -> Result<Point3> {
        check_parameter(t)?;
        let mut row = self.control_points.clone();
        while row.len() > 1 {
            for j in 0..row.len() - 1 {
                row[j] = row[j].lerp(row[j + 1], t);
            }
            row.pop();
        }
        Ok(row[0])
    }

    /// The hodograph: a degree-`(n-1)` curve with control points
    /// `n·(P_{m+1} - P_m)` satisfying `evaluate(hodograph, t) = C'(t)`.
    pub fn derivative_curve(&self) -> Result<BezierCurve> {
        let n = self.degree();
        if n < 1 {
            return Err(Error::DegreeTooLow { required: 1, actual: n });
        }
        let scale = n as f64;
        let points = self
            .control_points
            .windows(2)
            .map(|w| (w[1] - w[0]) * scale)
            .collect();
        Ok(BezierCurve { control_points: points })
    }

    /// The hodograph applied twice; requires degree at least 2.
    pub fn second_derivative_curve(&self) -> Result<BezierCurve> {
        let n = self.degree();
        if n < 2 {
            return Err(Error::DegreeTooLow { required: 2, actual: n });
        }
        self.derivative_curve()?.derivative_curve()
    }

    /// `C'(t)` via the hodograph.
    pub fn derivative_at(&self, t: f64) -> Result<Point3> {
        self.derivative_curve()?.evaluate(t)
    }

    /// Curvature `κ(t) = ‖C'(t) × C''(t)‖ / ‖C'(t)‖³`.
    ///
    /// Reports [`Error::NearSingular`] when `‖C'(t)‖` is at or below the
    /// regularity cutoff.
    pub fn curvature_at(&self, t: f64) -> Result<f64> {
        check_parameter(t)?;
        let n = self.degree();
        if n < 2 {
            return Err(Error::DegreeTooLow { required: 2, actual: n });
        }
        let d1 = self.derivative_curve()?;
        let d2 = d1.derivative_curve()?;
        let v = d1.evaluate(t)?;
        let a = d2.evaluate(t)?;
        let speed = v.norm();
        if speed <= self.regularity_epsilon() {
            return Err(Error::NearSingular { t, derivative_norm: speed });
        }
        Ok(v.cross(a).norm() / (speed * speed * speed))
    }

    /// Total curvature as the plain parameter integral `∫₀¹ |κ(t)| dt`
    /// (no arc-length weight), to absolute error `tol`.
    ///
    /// See [`crate::certify::total_curvature_arclen`] for the arc-length
    /// weighted variant used by the certificates.
    pub fn total_curvature_smooth(&self, tol: f64) -> Result<f64> {
        let n = self.degree();
        if n < 2 {
            return Err(Error::DegreeTooLow { required: 2, actual: n });
        }
        let d1 = self.derivative_curve()?;
        let d2 = d1.derivative_curve()?;
        let eps = self.regularity_epsilon();
        adaptive_simpson(
            |t| {
                let v = d1.evaluate(t)?;
                let a = d2.evaluate(t)?;
                let speed = v.norm();
                if speed <= eps {
                    return Err(Error::NearSingular { t, derivative_norm: speed });
                }
                Ok(v.cross(a).norm() / (speed * speed * speed))
            },
            0.0,
            1.0,
            tol,
        )
    }

    /// Samples `‖C'(t)‖` on a uniform grid and refines around the grid
    /// minimum by golden-section search.
    ///
    /// This is a heuristic screen for regularity, not a proof: a vanishing
    /// derivative between samples can be missed.
    pub fn regularity_check(&self, samples: usize) -> Result<RegularityReport> {
        if samples < 2 {
            return Err(Error::TooFewPoints { required: 2, actual: samples });
        }
        let eps = self.regularity_epsilon();
        if self.degree() == 0 {
            // Constant curve: derivative identically zero.
            return Ok(RegularityReport {
                min_derivative_norm: 0.0,
                argmin_t: 0.0,
                sample_count: samples,
                is_regular_at_samples: false,
            });
        }
        let hodo = self.derivative_curve()?;
        let speed = |t: f64| hodo.evaluate(t).map(|v| v.norm());

        let mut best_t = 0.0;
        let mut best = f64::INFINITY;
        for j in 0..samples {
            let t = j as f64 / (samples - 1) as f64;
            let s = speed(t)?;
            if s < best {
                best = s;
                best_t = t;
            }
        }

        // Golden-section refinement on the bracket around the grid argmin.
        let step = 1.0 / (samples - 1) as f64;
        let mut lo = (best_t - step).max(0.0);
        let mut hi = (best_t + step).min(1.0);
        let inv_phi = 0.618_033_988_749_894_9_f64;
        let mut c = hi - inv_phi * (hi - lo);
        let mut d = lo + inv_phi * (hi - lo);
        let mut fc = speed(c)?;
        let mut fd = speed(d)?;
        for _ in 0..200 {
            if hi - lo < 1e-14 {
                break;
            }
            if fc < fd {
                hi = d;
                d = c;
                fd = fc;
                c = hi - inv_phi * (hi - lo);
                fc = speed(c)?;
            } else {
                lo = c;
                c = d;
                fc = fd;
                d = lo + inv_phi * (hi - lo);
                fd = speed(d)?;
            }
        }
        let refined_t = 0.5 * (lo + hi);
        let refined = speed(refined_t)?;
        if refined < best {
            best = refined;
            best_t = refined_t;
        }

        Ok(RegularityReport {
            min_derivative_norm: best,
            argmin_t: best_t,
            sample_count: samples,
            is_regular_at_samples: best > eps,
        })
    }
}

/// Outcome of the sampling-based regularity screen.
#[derive(Debug, Clone, PartialEq)]
pub struct RegularityReport {
    /// Smallest sampled `‖C'(t)‖`, after local refinement.
    pub min_derivative_norm: f64,
    /// Parameter at which the minimum was found.
    pub argmin_t: f64,
    /// Number of uniform grid samples used.
    pub sample_count: usize,
    /// Whether the minimum clears the scale-aware regularity cutoff.
    pub is_regular_at_samples: bool,
}

fn check_parameter(t: f64) -> Result<()> {
    if !t.is_finite() || !(0.0..=1.0).contains(&t) {
        return Err(Error::ParameterOutOfRange(t));
    }
    Ok(())
}
