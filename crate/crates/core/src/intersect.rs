//! Brute-force self-intersection oracle for PL curves.
//!
//! Deliberately O(E²) and obviously correct: every edge pair is tested by a
//! segment–segment minimum-distance query in R^3. Adjacent edges share a
//! vertex, so they are tested only for overlap beyond it: a non-shared
//! endpoint of one edge lying within epsilon of the other edge.

use crate::error::{Error, Result};
use crate::point::Point3;
use crate::polyline::PLCurve;
use crate::segment::{point_segment_closest, segment_segment_closest};

/// Location of one detected edge–edge contact.
#[derive(Debug, Clone, PartialEq)]
pub struct IntersectionWitness {
    pub edge_a: usize,
    pub edge_b: usize,
    /// Nearest point of the contact (midpoint of the two closest points).
    pub point: Point3,
    /// True when the edges are adjacent and overlap beyond their shared
    /// vertex; false for a genuine non-adjacent crossing.
    pub adjacent_overlap: bool,
}

/// Result of the pairwise sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct IntersectionReport {
    pub intersecting: bool,
    pub witness: Option<IntersectionWitness>,
    pub epsilon_used: f64,
}

/// Default detection threshold: `1e-9` of the bounding-box diagonal.
pub fn default_intersection_epsilon(curve: &PLCurve) -> f64 {
    1e-9 * curve.bounding_box().diagonal()
}

/// Tests every edge pair of `curve` for closeness below `epsilon`.
///
/// On detection the lowest-index pair is returned, ordering by the later
/// edge first: the reported `edge_b` is the earliest edge that meets any
/// earlier edge, and `edge_a` the earliest such partner.
pub fn brute_force_self_intersection(
    curve: &PLCurve,
    epsilon: f64,
) -> Result<IntersectionReport> {
    if !(epsilon.is_finite() && epsilon > 0.0) {
        return Err(Error::InvalidTolerance(epsilon));
    }
    let edges = curve.edge_count();
    if edges < 2 {
        return Ok(IntersectionReport { intersecting: false, witness: None, epsilon_used: epsilon });
    }

    for b in 1..edges {
        for a in 0..b {
            let (a0, a1) = curve.edge(a);
            let (b0, b1) = curve.edge(b);
            let adjacent = a + 1 == b || (curve.is_closed() && a == 0 && b == edges - 1);
            if adjacent {
                if let Some(point) = adjacent_overlap(a0, a1, b0, b1, epsilon) {
                    return Ok(IntersectionReport {
                        intersecting: true,
                        witness: Some(IntersectionWitness {
                            edge_a: a,
                            edge_b: b,
                            point,
                            adjacent_overlap: true,
                        }),
                        epsilon_used: epsilon,
                    });
                }
            } else {
                let c = segment_segment_closest(a0, a1, b0, b1);
                if c.distance < epsilon {
                    return Ok(IntersectionReport {
                        intersecting: true,
                        witness: Some(IntersectionWitness {
                            edge_a: a,
                            edge_b: b,
                            point: c.point_a.midpoint(c.point_b),
                            adjacent_overlap: false,
                        }),
                        epsilon_used: epsilon,
                    });
                }
            }
        }
    }
    Ok(IntersectionReport { intersecting: false, witness: None, epsilon_used: epsilon })
}

/// Overlap test for edges sharing a vertex: flags when a non-shared endpoint
/// of either edge comes within epsilon of the other edge. Touching at the
/// shared vertex alone is not an intersection.
fn adjacent_overlap(
    a0: Point3,
    a1: Point3,
    b0: Point3,
    b1: Point3,
    epsilon: f64,
) -> Option<Point3> {
    // Work out which endpoints are shared; edge order may differ when the
    // closing edge wraps around.
    let pairs = [(a0, a1, b0, b1), (a0, a1, b1, b0), (a1, a0, b0, b1), (a1, a0, b1, b0)];
    let (_shared, a_far, _, b_far) = pairs
        .iter()
        .copied()
        .min_by(|x, y| x.0.distance(x.2).total_cmp(&y.0.distance(y.2)))
        .unwrap();

    let (on_a, d_b_far) = point_segment_closest(b_far, a0, a1);
    if d_b_far < epsilon {
        return Some(b_far.midpoint(on_a));
    }
    let (on_b, d_a_far) = point_segment_closest(a_far, b0, b1);
    if d_a_far < epsilon {
        return Some(a_far.midpoint(on_b));
    }
    None
}
