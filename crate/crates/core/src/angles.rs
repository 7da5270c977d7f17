//! Exterior angles, PL total curvature, uniform parametrizations and
//! discrete derivatives of subdivision pieces.
//!
//! Exterior angles are measured in `[0, π]` between consecutive oriented
//! edge vectors, via `atan2(‖u×v‖, u·v)` to stay accurate near 0 and π.
//! For closed curves the two wrap-around angles are included, so a closed
//! curve with `V` vertices has `V` angles and an open one has `V - 2`.

use crate::error::{Error, Result};
use crate::point::Point3;
use crate::polyline::PLCurve;
use crate::subdivision::{DyadicFraction, SubdivisionPiece};

/// What angle to assign at a vertex whose adjacent edge is shorter than the
/// degeneracy cutoff. Either way the vertex is reported; certificates refuse
/// windows containing one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DegenerateAnglePolicy {
    /// Record the vertex and score it as 0 (keeps angle sums small).
    #[default]
    Zero,
    /// Record the vertex and score it as π (maximally conservative for the
    /// sum-below-π certificate).
    Pi,
}

/// Exterior angles of a PL curve, one per interior vertex (every vertex for
/// closed curves).
#[derive(Debug, Clone, PartialEq)]
pub struct AngleProfile {
    /// Angles in radians, each in `[0, π]`. For open curves entry `k` sits at
    /// vertex `k + 1`; for closed curves entry `k` sits at vertex `k`.
    pub angles: Vec<f64>,
    pub max_angle: f64,
    pub sum_angles: f64,
    /// Vertex indices whose adjacent edge fell below the length cutoff.
    pub degenerate_vertices: Vec<usize>,
}

/// Angle between edge vectors `u` and `v` in `[0, π]`.
pub fn exterior_angle(u: Point3, v: Point3) -> f64 {
    u.cross(v).norm().atan2(u.dot(v))
}

/// Exterior angles with the default zero-scoring degeneracy policy.
pub fn exterior_angles(curve: &PLCurve) -> Result<AngleProfile> {
    exterior_angles_with_policy(curve, DegenerateAnglePolicy::Zero)
}

/// Exterior angles of `curve`; needs at least 3 vertices.
pub fn exterior_angles_with_policy(
    curve: &PLCurve,
    policy: DegenerateAnglePolicy,
) -> Result<AngleProfile> {
    let v = curve.vertices();
    if v.len() < 3 {
        return Err(Error::TooFewVertices { required: 3, actual: v.len() });
    }
    let edge_epsilon = 1e-12 * (1.0 + curve.bounding_box().diagonal());
    let n = v.len();
    let vertex_indices: Vec<usize> = if curve.is_closed() {
        (0..n).collect()
    } else {
        (1..n - 1).collect()
    };

    let mut angles = Vec::with_capacity(vertex_indices.len());
    let mut degenerate = Vec::new();
    for &m in &vertex_indices {
        let prev = v[(m + n - 1) % n];
        let here = v[m];
        let next = v[(m + 1) % n];
        let u = here - prev;
        let w = next - here;
        if u.norm() < edge_epsilon || w.norm() < edge_epsilon {
            degenerate.push(m);
            angles.push(match policy {
                DegenerateAnglePolicy::Zero => 0.0,
                DegenerateAnglePolicy::Pi => std::f64::consts::PI,
            });
        } else {
            let a = exterior_angle(u, w);
            debug_assert!((0.0..=std::f64::consts::PI + 1e-12).contains(&a));
            angles.push(a);
        }
    }
    let max_angle = angles.iter().cloned().fold(0.0, f64::max);
    let sum_angles = angles.iter().sum();
    Ok(AngleProfile { angles, max_angle, sum_angles, degenerate_vertices: degenerate })
}

/// Sum of exterior angles; the PL total curvature `κ(P̄)` for closed curves.
pub fn pl_total_curvature(curve: &PLCurve) -> Result<f64> {
    Ok(exterior_angles(curve)?.sum_angles)
}

/// The uniform parametrization of a subdivision piece: vertex `j` sits at
/// `t_j = lo + j·(hi - lo)/n` and the map is linear in between.
#[derive(Debug, Clone, PartialEq)]
pub struct UniformParametrization {
    vertices: Vec<Point3>,
    lo: f64,
    hi: f64,
}

impl UniformParametrization {
    pub fn breakpoints(&self) -> Vec<f64> {
        let n = (self.vertices.len() - 1) as f64;
        (0..self.vertices.len())
            .map(|j| self.lo + (self.hi - self.lo) * j as f64 / n)
            .collect()
    }

    pub fn interval(&self) -> (f64, f64) {
        (self.lo, self.hi)
    }

    /// Piecewise linear evaluation; `t` must lie in the piece's interval.
    pub fn eval(&self, t: f64) -> Result<Point3> {
        if !t.is_finite() || t < self.lo || t > self.hi {
            return Err(Error::ParameterOutOfRange(t));
        }
        let n = self.vertices.len() - 1;
        let width = (self.hi - self.lo) / n as f64;
        let raw = (t - self.lo) / width;
        let j = (raw.floor() as usize).min(n - 1);
        let local = raw - j as f64;
        Ok(self.vertices[j].lerp(self.vertices[j + 1], local))
    }
}

pub fn uniform_parametrization(piece: &SubdivisionPiece) -> UniformParametrization {
    UniformParametrization {
        vertices: piece.control_points().to_vec(),
        lo: piece.interval_lo().to_f64(),
        hi: piece.interval_hi().to_f64(),
    }
}

/// Forward difference quotients of a piece's control points with respect to
/// its uniform parametrization: `values[j] = (P_{j+1} - P_j) / Δt` where
/// `Δt = 1/(n·2^i)`. The interval is kept in exact dyadic form.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteDerivative {
    pub values: Vec<Point3>,
    pub interval_lo: DyadicFraction,
    pub interval_hi: DyadicFraction,
}

pub fn discrete_derivative(piece: &SubdivisionPiece) -> DiscreteDerivative {
    let pts = piece.control_points();
    let n = pts.len() - 1;
    // Δt = (hi - lo)/n with hi - lo = 2^-i; both factors are exact powers.
    let scale = n as f64 * 2f64.powi(piece.depth() as i32);
    let values = pts.windows(2).map(|w| (w[1] - w[0]) * scale).collect();
    DiscreteDerivative {
        values,
        interval_lo: piece.interval_lo(),
        interval_hi: piece.interval_hi(),
    }
}

/// Euclidean distance between consecutive discrete derivatives at interior
/// vertex `m`, `1 ≤ m ≤ n - 1`: the quantity whose decay drives angular
/// convergence. Equals `n·2^i·‖P_{m+1} - 2P_m + P_{m-1}‖`.
pub fn derivative_jump(piece: &SubdivisionPiece, m: usize) -> Result<f64> {
    let n = piece.degree();
    if m < 1 || m > n.saturating_sub(1) {
        return Err(Error::IndexOutOfRange { index: m, len: n });
    }
    let d = discrete_derivative(piece);
    Ok((d.values[m] - d.values[m - 1]).norm())
}
