//! Standard curves used across the test suites and shipped as files under
//! `fixtures/` in the repository root.
//!
//! The S-family curves are simple even though their control polygons
//! self-intersect: each has a strictly unimodal y-coordinate and mirror
//! symmetry, so distinct parameters cannot collide. The closed loops repeat
//! their first control point and are tangent-continuous at the closure.

use crate::bezier::BezierCurve;
use crate::point::Point3;
use crate::polyline::PLCurve;

fn curve(points: &[[f64; 3]]) -> BezierCurve {
    BezierCurve::new(points.iter().map(|p| Point3::new(p[0], p[1], p[2])).collect())
        .expect("fixture control points are finite")
}

/// Collinear, equally spaced: the degenerate straight-line cubic.
pub fn straight_line_cubic() -> BezierCurve {
    curve(&[[0.0, 0.0, 0.0], [1.0, 0.0, 0.0], [2.0, 0.0, 0.0], [3.0, 0.0, 0.0]])
}

/// The workhorse parabolic arc (0,0,0), (2,2,0), (4,0,0).
pub fn parabola_quadratic() -> BezierCurve {
    curve(&[[0.0, 0.0, 0.0], [2.0, 2.0, 0.0], [4.0, 0.0, 0.0]])
}

/// A cubic whose hodograph passes through the origin at t = 1/2: a cusp.
pub fn cusp_cubic() -> BezierCurve {
    curve(&[[0.0, 0.0, 0.0], [1.0, 1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0]])
}

/// Smooth regular arcs of degrees 2 through 6 used for the rate sweeps.
pub fn regular_arcs() -> Vec<BezierCurve> {
    vec![
        parabola_quadratic(),
        curve(&[[0.0, 0.0, 0.0], [1.0, 2.0, 0.0], [3.0, 2.0, 1.0], [4.0, 0.0, 0.0]]),
        curve(&[
            [0.0, 0.0, 0.0],
            [1.0, 2.0, 0.0],
            [2.0, 2.5, 0.5],
            [3.0, 2.0, 1.0],
            [4.0, 0.0, 1.0],
        ]),
        curve(&[
            [0.0, 0.0, 0.0],
            [1.0, 1.5, 0.0],
            [2.0, 2.0, 0.5],
            [3.0, 2.0, 1.0],
            [4.0, 1.5, 1.0],
            [5.0, 0.0, 1.0],
        ]),
        curve(&[
            [0.0, 0.0, 0.0],
            [1.0, 1.0, 0.2],
            [2.0, 1.8, 0.4],
            [3.0, 2.0, 0.6],
            [4.0, 1.8, 0.8],
            [5.0, 1.0, 1.0],
            [6.0, 0.0, 1.2],
        ]),
    ]
}

/// Degree-5 curve whose control polygon self-intersects while the curve
/// stays simple: the control x-coordinates backtrack (so the polygon
/// crosses) but x'(t) stays positive, making the curve x-monotone.
pub fn s1_quintic() -> BezierCurve {
    curve(&[
        [0.0, 0.0, 0.0],
        [0.8, 1.0, 0.0],
        [0.7, 0.5, 0.0],
        [1.0, 3.0, 0.0],
        [0.9, 2.0, 0.0],
        [1.7, 3.5, 0.0],
    ])
}

/// Cubic member of the same family.
pub fn s2_cubic() -> BezierCurve {
    curve(&[[0.0, 0.0, 0.0], [0.8, 3.0, 0.0], [0.2, 3.0, 0.0], [1.0, 0.0, 0.0]])
}

/// Quartic member of the same family.
pub fn s3_quartic() -> BezierCurve {
    curve(&[
        [0.0, 0.0, 0.0],
        [0.8, 1.0, 0.0],
        [0.65, 0.4, 0.0],
        [1.0, 3.0, 0.0],
        [1.8, 3.6, 0.0],
    ])
}

/// Simple regular curves whose depth-0 control polygons self-intersect.
pub fn s_family() -> Vec<BezierCurve> {
    vec![s1_quintic(), s2_cubic(), s3_quartic()]
}

/// Closed convex planar quartic loop, tangent-continuous where it closes
/// (first and last control points coincide).
pub fn convex_loop_quartic() -> BezierCurve {
    curve(&[
        [2.0, 0.0, 0.0],
        [2.0, 3.0, 0.0],
        [-4.0, 0.0, 0.0],
        [2.0, -3.0, 0.0],
        [2.0, 0.0, 0.0],
    ])
}

/// Closed regular quintic loop, tangent-continuous at the closure; not
/// required to be convex.
pub fn smooth_loop_quintic() -> BezierCurve {
    curve(&[
        [3.0, 0.0, 0.0],
        [3.0, 2.0, 0.0],
        [-1.0, 3.0, 0.0],
        [-1.0, -3.0, 0.0],
        [3.0, -2.0, 0.0],
        [3.0, 0.0, 0.0],
    ])
}

/// Unit square as a closed polyline.
pub fn unit_square() -> PLCurve {
    PLCurve::closed(vec![
        Point3::new(0.0, 0.0, 0.0),
        Point3::new(1.0, 0.0, 0.0),
        Point3::new(1.0, 1.0, 0.0),
        Point3::new(0.0, 1.0, 0.0),
    ])
    .expect("square is a valid closed polyline")
}

/// Regular convex hexagon in the plane.
pub fn convex_hexagon() -> PLCurve {
    let pts = (0..6)
        .map(|k| {
            let a = std::f64::consts::PI * k as f64 / 3.0;
            Point3::new(2.0 * a.cos(), 2.0 * a.sin(), 0.0)
        })
        .collect();
    PLCurve::closed(pts).expect("hexagon is a valid closed polyline")
}

/// The 6-vertex polygonal trefoil: vertices alternate between a radius-3
/// triangle at z = +1 (angles 90°, 330°, 210°) and a radius-2.5 triangle at
/// z = -1 (angles 260°, 140°, 20°).
///
/// Its xy-projection is a reduced diagram with exactly three transverse
/// crossings that alternate over/under along the strand, which pins the knot
/// type as the trefoil; the total curvature is about 4.18π.
pub fn trefoil_hexagon() -> PLCurve {
    let pts = [
        [1.8369701987210297e-16, 3.0, 1.0],
        [-0.4341204441673258, -2.46201938253052, -1.0],
        [2.598076211353315, -1.5000000000000013, 1.0],
        [-1.9151111077974448, 1.6069690242163488, -1.0],
        [-2.598076211353316, -1.5000000000000004, 1.0],
        [2.3492315519647713, 0.8550503583141718, -1.0],
    ];
    PLCurve::closed(pts.iter().map(|p| Point3::new(p[0], p[1], p[2])).collect())
        .expect("trefoil hexagon is a valid closed polyline")
}
