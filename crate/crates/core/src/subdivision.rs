//! De Casteljau subdivision at parameter 1/2.
//!
//! Subdivision is breadth-first: every piece is split each round, so depth
//! `i` always holds exactly `2^i` pieces covering the dyadic intervals
//! `[(k-1)/2^i, k/2^i]`. The splitting parameter is fixed at 1/2 so every
//! new coordinate is an exact `(x + y) / 2` midpoint.

use crate::bezier::BezierCurve;
use crate::error::{Error, Result};
use crate::point::Point3;
use crate::polyline::PLCurve;

/// Default cap on the total number of control points in one level.
pub const DEFAULT_MEMORY_CAP: u64 = 1 << 22;

/// A fraction `numerator / 2^exponent`, kept in integer form so interval
/// identities hold exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DyadicFraction {
    pub numerator: u64,
    pub exponent: u32,
}

impl DyadicFraction {
    pub const fn new(numerator: u64, exponent: u32) -> Self {
        Self { numerator, exponent }
    }

    /// Exact for the depths this crate admits (numerator ≤ 2^exponent ≤ 2^53).
    pub fn to_f64(self) -> f64 {
        self.numerator as f64 / (1u64 << self.exponent) as f64
    }
}

/// One of the `2^i` sub-curves of depth `i`, tagged with its parameter
/// interval.
#[derive(Debug, Clone, PartialEq)]
pub struct SubdivisionPiece {
    control_points: Vec<Point3>,
    interval_lo: DyadicFraction,
    interval_hi: DyadicFraction,
}

impl SubdivisionPiece {
    pub fn control_points(&self) -> &[Point3] {
        &self.control_points
    }

    pub fn degree(&self) -> usize {
        self.control_points.len() - 1
    }

    pub fn interval_lo(&self) -> DyadicFraction {
        self.interval_lo
    }

    pub fn interval_hi(&self) -> DyadicFraction {
        self.interval_hi
    }

    /// Subdivision depth that produced this piece.
    pub fn depth(&self) -> u32 {
        self.interval_lo.exponent
    }

    /// The piece as a standalone curve over its local parameter.
    pub fn as_curve(&self) -> BezierCurve {
        BezierCurve::new(self.control_points.clone())
            .expect("piece points come from a validated curve")
    }

    /// The piece's control polygon as an open PL curve.
    pub fn control_polygon(&self) -> Result<PLCurve> {
        PLCurve::open(self.control_points.clone())
    }
}

/// All pieces produced after `depth_i` rounds of midpoint splitting.
#[derive(Debug, Clone, PartialEq)]
pub struct SubdivisionLevel {
    depth_i: u32,
    pieces: Vec<SubdivisionPiece>,
}

impl SubdivisionLevel {
    pub fn depth(&self) -> u32 {
        self.depth_i
    }

    pub fn pieces(&self) -> &[SubdivisionPiece] {
        &self.pieces
    }

    /// Concatenates the pieces' control polygons, dropping each duplicated
    /// junction point: an open PL curve with `2^i·n + 1` vertices.
    pub fn polyline(&self) -> Result<PLCurve> {
        let n = self.pieces[0].degree();
        let mut vertices = Vec::with_capacity(self.pieces.len() * n + 1);
        for (k, piece) in self.pieces.iter().enumerate() {
            let pts = piece.control_points();
            if k == 0 {
                vertices.extend_from_slice(pts);
            } else {
                vertices.extend_from_slice(&pts[1..]);
            }
        }
        PLCurve::open(vertices)
    }
}

/// Splits a control polygon at parameter 1/2 by the midpoint pyramid.
///
/// Returns the pyramid's two laterals; the shared last/first point is the
/// curve value at 1/2. All arithmetic is exact coordinatewise averaging.
pub fn split_half(points: &[Point3]) -> Result<(Vec<Point3>, Vec<Point3>)> {
    if points.len() < 2 {
        return Err(Error::TooFewPoints { required: 2, actual: points.len() });
    }
    let mut row = points.to_vec();
    let mut left = Vec::with_capacity(points.len());
    let mut right = Vec::with_capacity(points.len());
    left.push(row[0]);
    right.push(*row.last().unwrap());
    while row.len() > 1 {
        for j in 0..row.len() - 1 {
            row[j] = row[j].midpoint(row[j + 1]);
        }
        row.pop();
        left.push(row[0]);
        right.push(*row.last().unwrap());
    }
    right.reverse();
    Ok((left, right))
}

/// Subdivides `curve` to depth `depth_i` under the default memory cap.
pub fn subdivide(curve: &BezierCurve, depth_i: u32) -> Result<SubdivisionLevel> {
    subdivide_with_cap(curve, depth_i, DEFAULT_MEMORY_CAP)
}

/// Subdivides `curve` to depth `depth_i`, failing loudly if the level would
/// hold more than `cap` control points in total.
pub fn subdivide_with_cap(
    curve: &BezierCurve,
    depth_i: u32,
    cap: u64,
) -> Result<SubdivisionLevel> {
    let n_points = curve.control_points().len() as u128;
    if curve.degree() < 1 {
        return Err(Error::TooFewPoints { required: 2, actual: curve.control_points().len() });
    }
    let total = (1u128 << depth_i) * n_points;
    if depth_i >= 64 || total > cap as u128 {
        return Err(Error::MemoryCapExceeded { depth: depth_i, points: total, cap });
    }

    let mut pieces = vec![SubdivisionPiece {
        control_points: curve.control_points().to_vec(),
        interval_lo: DyadicFraction::new(0, 0),
        interval_hi: DyadicFraction::new(1, 0),
    }];
    for level in 0..depth_i {
        let next_exp = level + 1;
        let mut next = Vec::with_capacity(pieces.len() * 2);
        for piece in &pieces {
            let (l, r) = split_half(&piece.control_points)?;
            let k2 = piece.interval_lo.numerator * 2;
            next.push(SubdivisionPiece {
                control_points: l,
                interval_lo: DyadicFraction::new(k2, next_exp),
                interval_hi: DyadicFraction::new(k2 + 1, next_exp),
            });
            next.push(SubdivisionPiece {
                control_points: r,
                interval_lo: DyadicFraction::new(k2 + 1, next_exp),
                interval_hi: DyadicFraction::new(k2 + 2, next_exp),
            });
        }
        pieces = next;
    }
    Ok(SubdivisionLevel { depth_i, pieces })
}

/// Distance between `curve(t)` and the re-evaluation of the piece containing
/// `t` at the matching local parameter. A test oracle for subdivision
/// correctness; exact subdivision makes this vanish up to rounding.
pub fn reconstruct_check(curve: &BezierCurve, level: &SubdivisionLevel, t: f64) -> Result<f64> {
    if !t.is_finite() || !(0.0..=1.0).contains(&t) {
        return Err(Error::ParameterOutOfRange(t));
    }
    let piece = level
        .pieces()
        .iter()
        .find(|p| t <= p.interval_hi().to_f64())
        .unwrap_or_else(|| level.pieces().last().unwrap());
    let lo = piece.interval_lo().to_f64();
    let hi = piece.interval_hi().to_f64();
    let local = ((t - lo) / (hi - lo)).clamp(0.0, 1.0);
    let on_piece = piece.as_curve().evaluate(local)?;
    let on_curve = curve.evaluate(t)?;
    Ok(on_piece.distance(on_curve))
}
