//! Machine-checkable certificates of simplicity and unknottedness.
//!
//! A piece whose exterior angles sum below π cannot self-intersect, so a
//! subdivision level whose pieces (and piece-pair windows across junctions)
//! all stay below π yields a simplicity certificate for the level polyline.
//! Unknottedness then follows for simple closed polylines whose total
//! curvature stays at or below 4π.
//!
//! Certificates are one-directional: failure to certify is reported as
//! `Inconclusive`, never as a claim of self-intersection or knottedness.

use std::f64::consts::PI;

use crate::angles::{exterior_angle, exterior_angles, pl_total_curvature};
use crate::bezier::BezierCurve;
use crate::error::{Error, Result};
use crate::intersect::{
    brute_force_self_intersection, default_intersection_epsilon, IntersectionReport,
};
use crate::point::Point3;
use crate::polyline::PLCurve;
use crate::quadrature::adaptive_simpson;
use crate::subdivision::{subdivide, SubdivisionLevel, SubdivisionPiece};

/// Slack below π so floating-point equality cannot flip a certificate.
pub const PI_MARGIN: f64 = 1e-9;
/// Slack below the 4π unknottedness threshold.
pub const FM_MARGIN: f64 = 1e-9;
/// Total-curvature bound under which a simple closed curve is unknotted.
pub const UNKNOT_THRESHOLD: f64 = 4.0 * PI;

/// How junctions between consecutive pieces are treated when certifying a
/// whole level polyline.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum JunctionMode {
    /// Require every sliding window `piece k + junction + piece k+1` to stay
    /// below π. Certifies the whole polyline, not just each piece.
    #[default]
    Windowed,
    /// Require only each individual piece sum below π. Junction angles are
    /// left unconstrained, so only per-piece simplicity is certified.
    PerPieceOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SimplicityVerdict {
    CertifiedSimple,
    Inconclusive,
}

/// A simplicity verdict with the numeric evidence that justifies it.
#[derive(Debug, Clone, PartialEq)]
pub struct SimplicityCertificate {
    pub verdict: SimplicityVerdict,
    /// Depth at which the verdict was reached (best depth seen when
    /// inconclusive).
    pub depth_i: u32,
    pub per_piece_angle_sums: Vec<f64>,
    pub max_piece_sum: f64,
    /// Largest sliding-window sum (piece + junction + piece) at `depth_i`.
    pub max_window_sum: f64,
    pub junction_handling_note: String,
    pub oracle_cross_check: Option<IntersectionReport>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnknotVerdict {
    CertifiedUnknotted,
    Inconclusive,
}

/// An unknottedness verdict for a closed PL curve.
///
/// The certificate covers the polyline itself; carrying it over to the
/// smooth curve would additionally need an isotopy argument.
#[derive(Debug, Clone, PartialEq)]
pub struct UnknotCertificate {
    pub verdict: UnknotVerdict,
    pub total_curvature_used: f64,
    pub threshold: f64,
    pub simplicity_evidence: SimplicityCertificate,
}

/// Sum of exterior angles of a piece's control polygon. Degree-1 pieces are
/// trivially simple and score 0.
pub fn piece_angle_sum(piece: &SubdivisionPiece) -> Result<f64> {
    if piece.degree() < 2 {
        return Ok(0.0);
    }
    Ok(exterior_angles(&piece.control_polygon()?)?.sum_angles)
}

/// Per-piece and junction angles of one subdivision level's polyline.
struct LevelAngles {
    per_piece_sums: Vec<f64>,
    /// Junction `k` joins piece `k` to piece `k+1` (mod piece count when
    /// closed; the wrap junction is the last entry).
    junction_angles: Vec<f64>,
    degenerate_vertices: Vec<usize>,
    max_piece_angle: f64,
    max_junction_angle: f64,
}

/// Splits a level polyline's angle profile into piece-interior angles and
/// junction angles. `polyline` must be `level.polyline()`, possibly closed
/// up with the duplicated closure vertex dropped.
fn level_angles(level: &SubdivisionLevel, polyline: &PLCurve) -> Result<LevelAngles> {
    let pieces = level.pieces().len();
    let n = level.pieces()[0].degree();
    let profile = exterior_angles(polyline)?;
    let mut per_piece_sums = vec![0.0; pieces];
    let mut junction_angles = Vec::new();
    let mut max_piece_angle: f64 = 0.0;
    let mut max_junction_angle: f64 = 0.0;

    if polyline.is_closed() {
        // Vertex v carries profile.angles[v]; junctions sit at multiples of n.
        debug_assert_eq!(profile.angles.len(), pieces * n);
        junction_angles = vec![0.0; pieces];
        for (v, &a) in profile.angles.iter().enumerate() {
            if v % n == 0 {
                // Vertex 0 is the wrap junction closing piece `pieces-1`.
                let j = (v / n + pieces - 1) % pieces;
                junction_angles[j] = a;
                max_junction_angle = max_junction_angle.max(a);
            } else {
                per_piece_sums[v / n] += a;
                max_piece_angle = max_piece_angle.max(a);
            }
        }
    } else {
        // Angle j sits at vertex j + 1.
        debug_assert_eq!(profile.angles.len(), pieces * n - 1);
        for (j, &a) in profile.angles.iter().enumerate() {
            let v = j + 1;
            if v % n == 0 {
                junction_angles.push(a);
                max_junction_angle = max_junction_angle.max(a);
            } else {
                per_piece_sums[v / n] += a;
                max_piece_angle = max_piece_angle.max(a);
            }
        }
        debug_assert_eq!(junction_angles.len(), pieces - 1);
    }

    Ok(LevelAngles {
        per_piece_sums,
        junction_angles,
        degenerate_vertices: profile.degenerate_vertices,
        max_piece_angle,
        max_junction_angle,
    })
}

/// Per-depth sweep data shared with the convergence module.
pub(crate) struct LevelAngleSummary {
    pub max_piece_angle: f64,
    pub max_junction_angle: f64,
}

pub(crate) fn level_angle_summary(level: &SubdivisionLevel) -> Result<LevelAngleSummary> {
    let polyline = level.polyline()?;
    let la = level_angles(level, &polyline)?;
    Ok(LevelAngleSummary {
        max_piece_angle: la.max_piece_angle,
        max_junction_angle: la.max_junction_angle,
    })
}

struct DepthOutcome {
    depth: u32,
    per_piece_sums: Vec<f64>,
    max_piece_sum: f64,
    max_window_sum: f64,
    passes: bool,
    polyline: PLCurve,
}

fn evaluate_depth(
    level: &SubdivisionLevel,
    polyline: PLCurve,
    mode: JunctionMode,
) -> Result<DepthOutcome> {
    let la = level_angles(level, &polyline)?;
    let pieces = la.per_piece_sums.len();
    let max_piece_sum = la.per_piece_sums.iter().cloned().fold(0.0, f64::max);

    let mut max_window_sum: f64 = 0.0;
    if polyline.is_closed() {
        if pieces == 1 {
            max_window_sum = la.per_piece_sums[0] + la.junction_angles[0];
        } else {
            for k in 0..pieces {
                let w = la.per_piece_sums[k]
                    + la.junction_angles[k]
                    + la.per_piece_sums[(k + 1) % pieces];
                max_window_sum = max_window_sum.max(w);
            }
        }
    } else if pieces == 1 {
        max_window_sum = la.per_piece_sums[0];
    } else {
        for k in 0..pieces - 1 {
            let w = la.per_piece_sums[k] + la.junction_angles[k] + la.per_piece_sums[k + 1];
            max_window_sum = max_window_sum.max(w);
        }
    }

    // Degenerate vertices anywhere make the whole depth ineligible.
    let condition = match mode {
        JunctionMode::Windowed => max_window_sum < PI - PI_MARGIN,
        JunctionMode::PerPieceOnly => max_piece_sum < PI - PI_MARGIN,
    };
    let passes = la.degenerate_vertices.is_empty() && condition;

    Ok(DepthOutcome {
        depth: level.depth(),
        per_piece_sums: la.per_piece_sums,
        max_piece_sum,
        max_window_sum,
        passes,
        polyline,
    })
}

fn junction_note(mode: JunctionMode, closed: bool) -> String {
    let base = match mode {
        JunctionMode::Windowed => {
            "windowed: every (piece + junction + piece) angle sum held below pi, \
             certifying the whole level polyline"
        }
        JunctionMode::PerPieceOnly => {
            "per-piece only: each piece angle sum held below pi; junction angles \
             unconstrained, so only per-piece simplicity is certified"
        }
    };
    if closed {
        format!("{base}; closed polyline, wrap-around junction included")
    } else {
        base.to_string()
    }
}

/// Certifies the level polyline simple with the default windowed junction
/// handling, subdividing as deep as `max_depth`.
///
/// The windowed condition bounds angle runs spanning two consecutive
/// pieces, so it excludes crossings among nearby edges; contacts between
/// far-apart pieces are outside its reach, which is what the `run_oracle`
/// cross-check is for. A certificate the oracle contradicts is returned as
/// [`Error::CertificateOracleConflict`], never silently.
pub fn certify_simple(
    curve: &BezierCurve,
    max_depth: u32,
    run_oracle: bool,
) -> Result<SimplicityCertificate> {
    certify_simple_with(curve, max_depth, run_oracle, JunctionMode::Windowed)
}

/// [`certify_simple`] with an explicit junction-handling mode.
pub fn certify_simple_with(
    curve: &BezierCurve,
    max_depth: u32,
    run_oracle: bool,
    mode: JunctionMode,
) -> Result<SimplicityCertificate> {
    certify_polyline_simple(curve, max_depth, run_oracle, mode, None)
}

/// Shared search over depths. `closure_tol` selects closed-loop handling.
fn certify_polyline_simple(
    curve: &BezierCurve,
    max_depth: u32,
    run_oracle: bool,
    mode: JunctionMode,
    closure_tol: Option<f64>,
) -> Result<SimplicityCertificate> {
    if curve.degree() == 1 && closure_tol.is_none() {
        // A segment is simple as-is.
        let polyline = PLCurve::open(curve.control_points().to_vec())?;
        let oracle = run_oracle_on(&polyline, run_oracle)?;
        return Ok(SimplicityCertificate {
            verdict: SimplicityVerdict::CertifiedSimple,
            depth_i: 0,
            per_piece_angle_sums: vec![0.0],
            max_piece_sum: 0.0,
            max_window_sum: 0.0,
            junction_handling_note: junction_note(mode, false),
            oracle_cross_check: oracle,
        });
    }

    let mut best: Option<DepthOutcome> = None;
    for depth in 0..=max_depth {
        let level = subdivide(curve, depth)?;
        let polyline = match closure_tol {
            None => level.polyline()?,
            Some(tol) => closed_level_polyline(&level, tol)?,
        };
        let outcome = evaluate_depth(&level, polyline, mode)?;
        if outcome.passes {
            let oracle = run_oracle_on(&outcome.polyline, run_oracle)?;
            if let Some(report) = &oracle {
                if report.intersecting {
                    let w = report.witness.as_ref().unwrap();
                    return Err(Error::CertificateOracleConflict {
                        depth,
                        edge_a: w.edge_a,
                        edge_b: w.edge_b,
                    });
                }
            }
            return Ok(SimplicityCertificate {
                verdict: SimplicityVerdict::CertifiedSimple,
                depth_i: depth,
                per_piece_angle_sums: outcome.per_piece_sums,
                max_piece_sum: outcome.max_piece_sum,
                max_window_sum: outcome.max_window_sum,
                junction_handling_note: junction_note(mode, closure_tol.is_some()),
                oracle_cross_check: oracle,
            });
        }
        let better = match &best {
            None => true,
            Some(b) => outcome.max_piece_sum < b.max_piece_sum,
        };
        if better {
            best = Some(outcome);
        }
    }

    let best = best.expect("at least depth 0 was evaluated");
    let oracle = run_oracle_on(&best.polyline, run_oracle)?;
    Ok(SimplicityCertificate {
        verdict: SimplicityVerdict::Inconclusive,
        depth_i: best.depth,
        per_piece_angle_sums: best.per_piece_sums,
        max_piece_sum: best.max_piece_sum,
        max_window_sum: best.max_window_sum,
        junction_handling_note: junction_note(mode, closure_tol.is_some()),
        oracle_cross_check: oracle,
    })
}

fn run_oracle_on(polyline: &PLCurve, run: bool) -> Result<Option<IntersectionReport>> {
    if !run {
        return Ok(None);
    }
    let eps = default_intersection_epsilon(polyline).max(f64::MIN_POSITIVE);
    Ok(Some(brute_force_self_intersection(polyline, eps)?))
}

/// Level polyline of a closed Bezier loop, with the duplicated closure
/// vertex dropped. The curve's endpoints must agree within `closure_tol`.
fn closed_level_polyline(level: &SubdivisionLevel, closure_tol: f64) -> Result<PLCurve> {
    let open = level.polyline()?;
    let vs = open.vertices();
    let gap = vs[0].distance(*vs.last().unwrap());
    if gap > closure_tol {
        return Err(Error::NotClosed { gap });
    }
    PLCurve::closed(vs[..vs.len() - 1].to_vec())
}

/// Certifies a closed Bezier loop unknotted: finds a depth whose closed
/// level polyline is certified simple, then checks its PL total curvature
/// against 4π.
///
/// `closure_tol` is the allowed gap between the first and last control
/// points; the polyline is closed by dropping the duplicated endpoint.
pub fn certify_unknotted(
    curve: &BezierCurve,
    max_depth: u32,
    closure_tol: f64,
) -> Result<UnknotCertificate> {
    if !(closure_tol.is_finite() && closure_tol >= 0.0) {
        return Err(Error::InvalidTolerance(closure_tol));
    }
    let pts = curve.control_points();
    let gap = pts[0].distance(*pts.last().unwrap());
    if gap > closure_tol {
        return Err(Error::NotClosed { gap });
    }

    let simplicity = certify_polyline_simple(
        curve,
        max_depth,
        true,
        JunctionMode::Windowed,
        Some(closure_tol),
    )?;
    let level = subdivide(curve, simplicity.depth_i)?;
    let polyline = closed_level_polyline(&level, closure_tol)?;
    let total = pl_total_curvature(&polyline)?;
    let verdict = if simplicity.verdict == SimplicityVerdict::CertifiedSimple
        && total <= UNKNOT_THRESHOLD - FM_MARGIN
    {
        UnknotVerdict::CertifiedUnknotted
    } else {
        UnknotVerdict::Inconclusive
    };
    Ok(UnknotCertificate {
        verdict,
        total_curvature_used: total,
        threshold: UNKNOT_THRESHOLD,
        simplicity_evidence: simplicity,
    })
}

/// Certifies an explicitly closed PL curve unknotted.
///
/// With no subdivision pieces to window, simplicity comes from the
/// brute-force oracle at closeness threshold `epsilon`; the total curvature
/// is the exact angle sum.
pub fn certify_unknotted_polyline(curve: &PLCurve, epsilon: f64) -> Result<UnknotCertificate> {
    if !curve.is_closed() {
        return Err(Error::NotClosed { gap: f64::INFINITY });
    }
    let profile = exterior_angles(curve)?;
    let report = brute_force_self_intersection(curve, epsilon)?;
    let simple = !report.intersecting && profile.degenerate_vertices.is_empty();
    let simplicity = SimplicityCertificate {
        verdict: if simple {
            SimplicityVerdict::CertifiedSimple
        } else {
            SimplicityVerdict::Inconclusive
        },
        depth_i: 0,
        per_piece_angle_sums: Vec::new(),
        max_piece_sum: 0.0,
        max_window_sum: 0.0,
        junction_handling_note:
            "closed polyline given directly: simplicity established by the brute-force \
             intersection oracle, not by piece angle sums"
                .to_string(),
        oracle_cross_check: Some(report),
    };
    let total = profile.sum_angles;
    let verdict = if simple && total <= UNKNOT_THRESHOLD - FM_MARGIN {
        UnknotVerdict::CertifiedUnknotted
    } else {
        UnknotVerdict::Inconclusive
    };
    Ok(UnknotCertificate {
        verdict,
        total_curvature_used: total,
        threshold: UNKNOT_THRESHOLD,
        simplicity_evidence: simplicity,
    })
}

/// Total curvature with the classical arc-length weight:
/// `∫₀¹ κ(t)·‖C'(t)‖ dt`, to absolute error `tol`.
///
/// This is the quantity the Fenchel and Fary-Milnor bounds speak about and
/// the limit of the PL total curvature under subdivision;
/// [`BezierCurve::total_curvature_smooth`] is the unweighted parameter
/// integral.
pub fn total_curvature_arclen(curve: &BezierCurve, tol: f64) -> Result<f64> {
    let n = curve.degree();
    if n < 2 {
        return Err(Error::DegreeTooLow { required: 2, actual: n });
    }
    let d1 = curve.derivative_curve()?;
    let d2 = d1.derivative_curve()?;
    let eps = curve.regularity_epsilon();
    adaptive_simpson(
        |t| {
            let v = d1.evaluate(t)?;
            let a = d2.evaluate(t)?;
            let speed = v.norm();
            if speed <= eps {
                return Err(Error::NearSingular { t, derivative_norm: speed });
            }
            Ok(v.cross(a).norm() / (speed * speed))
        },
        0.0,
        1.0,
        tol,
    )
}

/// Turning of the tangent direction measured by dense sampling; a test
/// oracle for [`total_curvature_arclen`] on planar curves.
pub fn tangent_turning_estimate(curve: &BezierCurve, samples: usize) -> Result<f64> {
    let d1 = curve.derivative_curve()?;
    let mut prev: Option<Point3> = None;
    let mut acc = 0.0;
    for j in 0..=samples {
        let t = j as f64 / samples as f64;
        let v = d1.evaluate(t)?;
        if let Some(p) = prev {
            acc += exterior_angle(p, v);
        }
        prev = Some(v);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subdivision::subdivide;

    fn quad() -> BezierCurve {
        BezierCurve::new(vec![
            Point3::new(0.0, 0.0, 0.0),
            Point3::new(2.0, 2.0, 0.0),
            Point3::new(4.0, 0.0, 0.0),
        ])
        .unwrap()
    }

    #[test]
    fn collinear_piece_sums_to_zero() {
        let line = BezierCurve::new(vec![
            Point3::new(0.0, 0.0, 0.0),
            Point3::new(1.0, 0.0, 0.0),
            Point3::new(2.0, 0.0, 0.0),
            Point3::new(3.0, 0.0, 0.0),
        ])
        .unwrap();
        let level = subdivide(&line, 2).unwrap();
        for piece in level.pieces() {
            assert_eq!(piece_angle_sum(piece).unwrap(), 0.0);
        }
    }

    #[test]
    fn quadratic_piece_sums() {
        // Depth 0: angle between (2,2,0) and (2,-2,0) is π/2.
        let level0 = subdivide(&quad(), 0).unwrap();
        assert!((piece_angle_sum(&level0.pieces()[0]).unwrap() - PI / 2.0).abs() < 1e-14);
        // Depth 1 left piece: angle between (1,1,0) and (1,0,0) is π/4.
        let level1 = subdivide(&quad(), 1).unwrap();
        assert!((piece_angle_sum(&level1.pieces()[0]).unwrap() - PI / 4.0).abs() < 1e-14);
    }

    #[test]
    fn degree_one_piece_is_trivially_simple() {
        let seg = BezierCurve::new(vec![Point3::ORIGIN, Point3::new(1.0, 0.0, 0.0)]).unwrap();
        let level = subdivide(&seg, 1).unwrap();
        assert_eq!(piece_angle_sum(&level.pieces()[0]).unwrap(), 0.0);
    }

    #[test]
    fn straight_cubic_certifies_at_depth_zero() {
        let line = BezierCurve::new(vec![
            Point3::new(0.0, 0.0, 0.0),
            Point3::new(1.0, 0.0, 0.0),
            Point3::new(2.0, 0.0, 0.0),
            Point3::new(3.0, 0.0, 0.0),
        ])
        .unwrap();
        let cert = certify_simple(&line, 0, true).unwrap();
        assert_eq!(cert.verdict, SimplicityVerdict::CertifiedSimple);
        assert_eq!(cert.depth_i, 0);
        assert!(cert.per_piece_angle_sums.iter().all(|s| *s == 0.0));
        assert!(!cert.oracle_cross_check.unwrap().intersecting);
    }

    #[test]
    fn quadratic_certifies_at_depth_zero() {
        // The single depth-0 sum is π/2 < π.
        let cert = certify_simple(&quad(), 4, true).unwrap();
        assert_eq!(cert.verdict, SimplicityVerdict::CertifiedSimple);
        assert_eq!(cert.depth_i, 0);
        assert!((cert.max_piece_sum - PI / 2.0).abs() < 1e-12);
    }

    #[test]
    fn per_piece_mode_certifies_pieces_separately() {
        let cert =
            certify_simple_with(&quad(), 4, false, JunctionMode::PerPieceOnly).unwrap();
        assert_eq!(cert.verdict, SimplicityVerdict::CertifiedSimple);
        assert!(cert.junction_handling_note.contains("per-piece"));
    }

    #[test]
    fn inconclusive_keeps_best_depth_evidence() {
        // Max depth 0 with a polygon whose angle sum exceeds π: the S-shaped
        // cubic below turns by more than π at depth 0.
        let s = BezierCurve::new(vec![
            Point3::new(0.0, 0.0, 0.0),
            Point3::new(2.0, 3.0, 0.0),
            Point3::new(-1.0, 3.0, 0.0),
            Point3::new(1.0, 0.0, 0.0),
        ])
        .unwrap();
        let cert = certify_simple(&s, 0, false).unwrap();
        assert_eq!(cert.verdict, SimplicityVerdict::Inconclusive);
        assert_eq!(cert.depth_i, 0);
        assert!(cert.max_piece_sum >= PI);
    }

    #[test]
    fn segment_certifies_trivially() {
        let seg = BezierCurve::new(vec![Point3::ORIGIN, Point3::new(1.0, 2.0, 3.0)]).unwrap();
        let cert = certify_simple(&seg, 3, true).unwrap();
        assert_eq!(cert.verdict, SimplicityVerdict::CertifiedSimple);
        assert_eq!(cert.max_piece_sum, 0.0);
    }

    #[test]
    fn square_polyline_certified_unknotted_by_oracle() {
        let square = PLCurve::closed(vec![
            Point3::new(0.0, 0.0, 0.0),
            Point3::new(1.0, 0.0, 0.0),
            Point3::new(1.0, 1.0, 0.0),
            Point3::new(0.0, 1.0, 0.0),
        ])
        .unwrap();
        let cert = certify_unknotted_polyline(&square, 1e-9).unwrap();
        assert_eq!(cert.verdict, UnknotVerdict::CertifiedUnknotted);
        assert!((cert.total_curvature_used - 2.0 * PI).abs() < 1e-12);
        assert_eq!(
            cert.simplicity_evidence.verdict,
            SimplicityVerdict::CertifiedSimple
        );
    }

    #[test]
    fn bowtie_polyline_stays_inconclusive() {
        let bowtie = PLCurve::closed(vec![
            Point3::new(0.0, 0.0, 0.0),
            Point3::new(2.0, 0.0, 0.0),
            Point3::new(0.0, 1.0, 0.0),
            Point3::new(2.0, 1.0, 0.0),
        ])
        .unwrap();
        let cert = certify_unknotted_polyline(&bowtie, 1e-9).unwrap();
        assert_eq!(cert.verdict, UnknotVerdict::Inconclusive);
    }

    #[test]
    fn open_polyline_rejected_for_unknot() {
        let open = PLCurve::open(vec![
            Point3::new(0.0, 0.0, 0.0),
            Point3::new(1.0, 0.0, 0.0),
            Point3::new(1.0, 1.0, 0.0),
        ])
        .unwrap();
        assert!(matches!(
            certify_unknotted_polyline(&open, 1e-9),
            Err(Error::NotClosed { .. })
        ));
    }

    #[test]
    fn unknot_requires_closed_loop_geometry() {
        assert!(matches!(
            certify_unknotted(&quad(), 4, 1e-12),
            Err(Error::NotClosed { .. })
        ));
    }

    #[test]
    fn arclen_total_curvature_of_parabola() {
        // The tangent of the parabola turns from 45° to -45°: exactly π/2.
        let v = total_curvature_arclen(&quad(), 1e-10).unwrap();
        assert!((v - PI / 2.0).abs() < 1e-9);
        let sweep = tangent_turning_estimate(&quad(), 20_000).unwrap();
        assert!((v - sweep).abs() < 0.05 * v);
    }

    #[test]
    fn degenerate_vertices_block_certification() {
        // A repeated first control point (C'(0) = 0) keeps a zero-length
        // leading edge in every level's polyline, so no depth can certify.
        // An interior repeat smooths out after one split and certifies.
        let c = BezierCurve::new(vec![
            Point3::new(0.0, 0.0, 0.0),
            Point3::new(0.0, 0.0, 0.0),
            Point3::new(1.0, 1.0, 0.0),
            Point3::new(2.0, 0.0, 0.0),
        ])
        .unwrap();
        let cert = certify_simple(&c, 5, false).unwrap();
        assert_eq!(cert.verdict, SimplicityVerdict::Inconclusive);

        let interior = BezierCurve::new(vec![
            Point3::new(0.0, 0.0, 0.0),
            Point3::new(1.0, 1.0, 0.0),
            Point3::new(1.0, 1.0, 0.0),
            Point3::new(2.0, 0.0, 0.0),
        ])
        .unwrap();
        let cert = certify_simple(&interior, 5, true).unwrap();
        assert_eq!(cert.verdict, SimplicityVerdict::CertifiedSimple);
        assert!(cert.depth_i >= 1);
    }

    #[test]
    fn arclen_total_curvature_of_line_is_zero() {
        let line = BezierCurve::new(vec![
            Point3::new(0.0, 0.0, 0.0),
            Point3::new(1.0, 0.0, 0.0),
            Point3::new(2.0, 0.0, 0.0),
            Point3::new(3.0, 0.0, 0.0),
        ])
        .unwrap();
        assert!(total_curvature_arclen(&line, 1e-9).unwrap().abs() < 1e-12);
    }
}
