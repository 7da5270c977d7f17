//! Closest-point queries on line segments in R^3.

use crate::point::Point3;

/// Closest approach between two segments.
#[derive(Debug, Clone, Copy)]
pub struct SegmentClosest {
    /// Parameter on the first segment, in `[0, 1]`.
    pub s: f64,
    /// Parameter on the second segment, in `[0, 1]`.
    pub t: f64,
    pub point_a: Point3,
    pub point_b: Point3,
    pub distance: f64,
}

/// Distance from `p` to the segment `[a, b]`, together with the closest point.
pub fn point_segment_closest(p: Point3, a: Point3, b: Point3) -> (Point3, f64) {
    let ab = b - a;
    let len_sq = ab.norm_squared();
    if len_sq == 0.0 {
        return (a, p.distance(a));
    }
    let t = ((p - a).dot(ab) / len_sq).clamp(0.0, 1.0);
    let q = a + ab * t;
    (q, p.distance(q))
}

pub fn point_segment_distance(p: Point3, a: Point3, b: Point3) -> f64 {
    point_segment_closest(p, a, b).1
}

/// Closest points between segments `[p1, q1]` and `[p2, q2]`.
///
/// The clamped quadratic minimization handles degenerate (zero-length)
/// segments by treating them as points.
pub fn segment_segment_closest(p1: Point3, q1: Point3, p2: Point3, q2: Point3) -> SegmentClosest {
    let d1 = q1 - p1;
    let d2 = q2 - p2;
    let r = p1 - p2;
    let a = d1.norm_squared();
    let e = d2.norm_squared();
    let f = d2.dot(r);

    let (mut s, mut t);
    if a == 0.0 && e == 0.0 {
        s = 0.0;
        t = 0.0;
    } else if a == 0.0 {
        s = 0.0;
        t = (f / e).clamp(0.0, 1.0);
    } else {
        let c = d1.dot(r);
        if e == 0.0 {
            t = 0.0;
            s = (-c / a).clamp(0.0, 1.0);
        } else {
            let b = d1.dot(d2);
            let denom = a * e - b * b;
            // Parallel segments leave s free; pick the start and let the
            // t-clamp below find the right opposing point.
            s = if denom != 0.0 {
                ((b * f - c * e) / denom).clamp(0.0, 1.0)
            } else {
                0.0
            };
            t = (b * s + f) / e;
            if t < 0.0 {
                t = 0.0;
                s = (-c / a).clamp(0.0, 1.0);
            } else if t > 1.0 {
                t = 1.0;
                s = ((b - c) / a).clamp(0.0, 1.0);
            }
        }
    }

    let point_a = p1 + d1 * s;
    let point_b = p2 + d2 * t;
    SegmentClosest { s, t, point_a, point_b, distance: point_a.distance(point_b) }
}
