//! Curve-file parsing, CSV/SVG report output, and the `curvecert` command
//! line.
//!
//! The curve file format is line oriented:
//!
//! ```text
//! # comment
//! bezier <name> degree=<n> closed=<0|1>
//! <x> <y> <z>        (n + 1 point lines)
//! ```
//!
//! Exit codes: 0 success, 1 error, 2 inconclusive certificate.

use std::ffi::OsString;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use curvecert::{
    certify_simple_with, certify_unknotted, certify_unknotted_polyline,
    default_intersection_epsilon, exterior_angles, hausdorff_estimate, pl_total_curvature,
    subdivide, sweep_cos_defect, sweep_derivative_jumps, sweep_exterior_angles,
    sweep_hausdorff, BezierCurve, ConvergenceReport, JunctionMode, PLCurve, Point3,
    SimplicityCertificate, SimplicityVerdict, UnknotCertificate, UnknotVerdict,
};

pub mod format {
    //! The `.curve` text format.

    use super::*;

    /// A parsed curve file: name, degree, control points, closed flag.
    #[derive(Debug, Clone, PartialEq)]
    pub struct CurveFile {
        pub name: String,
        pub degree: usize,
        pub points: Vec<Point3>,
        pub closed: bool,
    }

    impl CurveFile {
        pub fn to_curve(&self) -> Result<BezierCurve, CliError> {
            BezierCurve::new(self.points.clone()).map_err(CliError::Geometry)
        }

        /// The points interpreted directly as a polyline. For closed inputs
        /// whose last point repeats the first (a closed Bezier loop), the
        /// duplicate is dropped.
        pub fn to_polyline(&self) -> Result<PLCurve, CliError> {
            let mut pts = self.points.clone();
            if self.closed && pts.len() > 2 && pts.first() == pts.last() {
                pts.pop();
            }
            PLCurve::new(pts, self.closed).map_err(CliError::Geometry)
        }
    }

    pub fn parse_curve_file(text: &str) -> Result<CurveFile, CliError> {
        let mut header: Option<(String, usize, bool)> = None;
        let mut points = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            }
            .trim();
            if line.is_empty() {
                continue;
            }
            if line.starts_with("bezier") {
                if header.is_some() {
                    return Err(CliError::Parse {
                        line: lineno,
                        message: "duplicate header line".into(),
                    });
                }
                header = Some(parse_header(line, lineno)?);
                continue;
            }
            let h = header.as_ref().ok_or(CliError::Parse {
                line: lineno,
                message: "point line before header".into(),
            })?;
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.len() != 3 {
                return Err(CliError::Parse {
                    line: lineno,
                    message: format!("expected 3 coordinates, found {}", tokens.len()),
                });
            }
            let mut coords = [0.0f64; 3];
            for (slot, tok) in coords.iter_mut().zip(&tokens) {
                *slot = tok.parse().map_err(|_| CliError::Parse {
                    line: lineno,
                    message: format!("non-numeric coordinate {:?}", tok),
                })?;
            }
            if points.len() == h.1 + 1 {
                return Err(CliError::Parse {
                    line: lineno,
                    message: format!("more than the {} points the header promises", h.1 + 1),
                });
            }
            points.push(Point3::new(coords[0], coords[1], coords[2]));
        }
        let (name, degree, closed) = header.ok_or(CliError::Parse {
            line: 0,
            message: "missing `bezier` header line".into(),
        })?;
        if points.len() != degree + 1 {
            return Err(CliError::Parse {
                line: 0,
                message: format!(
                    "degree {} needs {} points, found {} ({} missing)",
                    degree,
                    degree + 1,
                    points.len(),
                    degree + 1 - points.len()
                ),
            });
        }
        for (i, p) in points.iter().enumerate() {
            if !p.is_finite() {
                return Err(CliError::Parse {
                    line: 0,
                    message: format!("point {} is not finite", i),
                });
            }
        }
        Ok(CurveFile { name, degree, points, closed })
    }

    fn parse_header(line: &str, lineno: usize) -> Result<(String, usize, bool), CliError> {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let bad = |message: String| CliError::Parse { line: lineno, message };
        if tokens.len() != 4 || tokens[0] != "bezier" {
            return Err(bad("header must be `bezier <name> degree=<n> closed=<0|1>`".into()));
        }
        let name = tokens[1].to_string();
        let degree: usize = tokens[2]
            .strip_prefix("degree=")
            .ok_or_else(|| bad("expected degree=<n>".into()))?
            .parse()
            .map_err(|_| bad("degree is not an integer".into()))?;
        if degree < 1 {
            return Err(bad("degree must be at least 1".into()));
        }
        let closed = match tokens[3].strip_prefix("closed=") {
            Some("0") => false,
            Some("1") => true,
            _ => return Err(bad("expected closed=0 or closed=1".into())),
        };
        Ok((name, degree, closed))
    }

    /// Inverse of [`parse_curve_file`]; numbers use shortest round-trip
    /// decimals.
    pub fn serialize_curve_file(file: &CurveFile) -> String {
        let mut out = format!(
            "bezier {} degree={} closed={}\n",
            file.name,
            file.degree,
            if file.closed { 1 } else { 0 }
        );
        for p in &file.points {
            out.push_str(&format!("{} {} {}\n", p.x, p.y, p.z));
        }
        out
    }

    pub fn load_curve_file(path: &Path) -> Result<CurveFile, CliError> {
        let text = fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?;
        parse_curve_file(&text)
    }
}

pub mod report {
    //! CSV serialization for convergence reports and certificates.

    use super::*;

    /// Convergence report as CSV: one row per fitted depth.
    pub fn convergence_csv(report: &ConvergenceReport) -> String {
        let mut out = String::from(if report.junction_values.is_some() {
            "depth,value,log2_value,junction_max\n"
        } else {
            "depth,value,log2_value\n"
        });
        for (depth, value) in report.depths.iter().zip(&report.values) {
            if let Some(junctions) = &report.junction_values {
                let jmax = junctions
                    .iter()
                    .find(|(d, _)| d == depth)
                    .map(|(_, v)| *v)
                    .unwrap_or(0.0);
                out.push_str(&format!("{},{},{},{}\n", depth, value, value.log2(), jmax));
            } else {
                out.push_str(&format!("{},{},{}\n", depth, value, value.log2()));
            }
        }
        out
    }

    /// Simplicity certificate as key-value CSV rows.
    pub fn simplicity_csv(cert: &SimplicityCertificate) -> String {
        let mut out = String::from("key,value\n");
        out.push_str("kind,simplicity\n");
        out.push_str(&format!("verdict,{}\n", simplicity_verdict_name(cert.verdict)));
        out.push_str(&format!("depth_i,{}\n", cert.depth_i));
        out.push_str(&format!("max_piece_sum,{}\n", cert.max_piece_sum));
        out.push_str(&format!("max_window_sum,{}\n", cert.max_window_sum));
        out.push_str(&format!("pieces,{}\n", cert.per_piece_angle_sums.len()));
        if let Some(oracle) = &cert.oracle_cross_check {
            out.push_str(&format!("oracle_intersecting,{}\n", oracle.intersecting));
        }
        out
    }

    /// Unknot certificate as key-value CSV rows, simplicity evidence
    /// included.
    pub fn unknot_csv(cert: &UnknotCertificate) -> String {
        let mut out = String::from("key,value\n");
        out.push_str("kind,unknot\n");
        out.push_str(&format!(
            "verdict,{}\n",
            match cert.verdict {
                UnknotVerdict::CertifiedUnknotted => "certified_unknotted",
                UnknotVerdict::Inconclusive => "inconclusive",
            }
        ));
        out.push_str(&format!("total_curvature_used,{}\n", cert.total_curvature_used));
        out.push_str(&format!("threshold,{}\n", cert.threshold));
        out.push_str(&format!(
            "simplicity_verdict,{}\n",
            simplicity_verdict_name(cert.simplicity_evidence.verdict)
        ));
        out.push_str(&format!("simplicity_depth_i,{}\n", cert.simplicity_evidence.depth_i));
        out
    }

    fn simplicity_verdict_name(v: SimplicityVerdict) -> &'static str {
        match v {
            SimplicityVerdict::CertifiedSimple => "certified_simple",
            SimplicityVerdict::Inconclusive => "inconclusive",
        }
    }

    pub fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
        fs::write(path, text).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })
    }
}

pub mod svg {
    //! Minimal deterministic SVG rendering of labeled polylines.

    use super::*;

    #[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
    pub enum Projection {
        Xy,
        Xz,
        Yz,
    }

    impl Projection {
        fn apply(self, p: Point3) -> (f64, f64) {
            // The vertical coordinate is negated so larger values render
            // upward in SVG's y-down frame; adding 0.0 drops negative zero.
            match self {
                Projection::Xy => (p.x, -p.y + 0.0),
                Projection::Xz => (p.x, -p.z + 0.0),
                Projection::Yz => (p.y, -p.z + 0.0),
            }
        }
    }

    const PALETTE: [&str; 6] =
        ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"];

    /// Renders each labeled polyline as a `<path>`, viewBox fitted to the
    /// data with a 5% margin. Identical inputs produce identical bytes.
    pub fn render_svg(
        polylines: &[(String, PLCurve)],
        projection: Projection,
        mark_vertices: bool,
    ) -> Result<String, CliError> {
        if polylines.is_empty() {
            return Err(CliError::EmptyRender);
        }
        let mut min = (f64::INFINITY, f64::INFINITY);
        let mut max = (f64::NEG_INFINITY, f64::NEG_INFINITY);
        for (_, pl) in polylines {
            for v in pl.vertices() {
                let (x, y) = projection.apply(*v);
                min.0 = min.0.min(x);
                min.1 = min.1.min(y);
                max.0 = max.0.max(x);
                max.1 = max.1.max(y);
            }
        }
        let pad_x = 0.05 * (max.0 - min.0).max(1e-9);
        let pad_y = 0.05 * (max.1 - min.1).max(1e-9);
        let (x0, y0) = (min.0 - pad_x, min.1 - pad_y);
        let (w, h) = (max.0 - min.0 + 2.0 * pad_x, max.1 - min.1 + 2.0 * pad_y);
        let stroke_width = 0.004 * w.max(h);

        let mut out = format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\">\n",
            x0, y0, w, h
        );
        for (idx, (label, pl)) in polylines.iter().enumerate() {
            let color = PALETTE[idx % PALETTE.len()];
            let mut d = String::new();
            for (k, v) in pl.vertices().iter().enumerate() {
                let (x, y) = projection.apply(*v);
                d.push_str(&format!("{}{} {}", if k == 0 { "M" } else { " L" }, x, y));
            }
            if pl.is_closed() {
                d.push_str(" Z");
            }
            out.push_str(&format!(
                "  <path data-label=\"{}\" d=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"{}\"/>\n",
                label, d, color, stroke_width
            ));
            if mark_vertices {
                for v in pl.vertices() {
                    let (x, y) = projection.apply(*v);
                    out.push_str(&format!(
                        "  <circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{}\"/>\n",
                        x,
                        y,
                        1.5 * stroke_width,
                        color
                    ));
                }
            }
        }
        out.push_str("</svg>\n");
        Ok(out)
    }
}

/// Errors surfaced to the user with exit code 1.
#[derive(Debug)]
pub enum CliError {
    Parse { line: usize, message: String },
    Io { path: String, source: std::io::Error },
    Geometry(curvecert::Error),
    EmptyRender,
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Parse { line: 0, message } => write!(f, "parse error: {}", message),
            Self::Parse { line, message } => {
                write!(f, "parse error at line {}: {}", line, message)
            }
            Self::Io { path, source } => write!(f, "{}: {}", path, source),
            Self::Geometry(e) => write!(f, "{}", e),
            Self::EmptyRender => write!(f, "nothing to render"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<curvecert::Error> for CliError {
    fn from(e: curvecert::Error) -> Self {
        CliError::Geometry(e)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MetricArg {
    Jump,
    Angle,
    CosDefect,
    Hausdorff,
}

#[derive(Parser)]
#[command(
    name = "curvecert",
    about = "Bezier subdivision, exterior-angle convergence, and PL curve certificates",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Subdivide a curve and report (optionally render) the level polyline.
    Subdivide {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        depth: u32,
        /// Write an SVG of the control polygon and the level polyline.
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "xy")]
        projection: svg::Projection,
        /// Mark polyline vertices in the SVG.
        #[arg(long)]
        mark_vertices: bool,
    },
    /// Exterior-angle profile of the depth-i level polyline.
    Angles {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        depth: u32,
        /// Treat the file's points directly as polyline vertices.
        #[arg(long)]
        polyline: bool,
    },
    /// Certify the level polyline non-self-intersecting via angle sums.
    CertifySimple {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        max_depth: u32,
        /// Cross-check any certificate with the brute-force oracle.
        #[arg(long)]
        oracle: bool,
        /// Certify each piece separately instead of the whole polyline.
        #[arg(long)]
        per_piece_only: bool,
        /// Write the certificate as key-value CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Certify a closed curve (or closed polyline with --polyline)
    /// unknotted via total curvature.
    CertifyUnknot {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        max_depth: u32,
        /// Treat the file's points directly as a closed polyline.
        #[arg(long)]
        polyline: bool,
        /// Allowed gap between first and last control points.
        #[arg(long, default_value_t = 1e-9)]
        closure_tol: f64,
        /// Intersection epsilon for the --polyline oracle; defaults to
        /// 1e-9 of the bounding-box diagonal.
        #[arg(long)]
        epsilon: Option<f64>,
        /// Write the certificate as key-value CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Sweep a convergence metric over depths and fit its decay slope.
    Converge {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum)]
        metric: MetricArg,
        #[arg(long, default_value_t = 5)]
        from: u32,
        #[arg(long, default_value_t = 12)]
        to: u32,
        /// Samples per depth for the hausdorff metric.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Write the swept values as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Hausdorff distance estimate between the curve and one level polyline.
    Hausdorff {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        depth: u32,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
}

/// Outcome of a command: exit 0, or exit 2 for an inconclusive certificate.
enum Outcome {
    Done,
    Inconclusive,
}

/// Runs the CLI on explicit arguments and returns the process exit code
/// (0 success, 1 error, 2 inconclusive certificate).
pub fn run_cli<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(Outcome::Done) => 0,
        Ok(Outcome::Inconclusive) => 2,
        Err(e) => {
            eprintln!("error: {}", e);
            1
        }
    }
}

fn closed_polyline_at_depth(
    curve: &BezierCurve,
    depth: u32,
    tol: f64,
) -> Result<PLCurve, CliError> {
    let open = subdivide(curve, depth)?.polyline()?;
    let vs = open.vertices();
    let gap = vs[0].distance(*vs.last().unwrap());
    if gap > tol {
        return Err(CliError::Geometry(curvecert::Error::NotClosed { gap }));
    }
    Ok(PLCurve::closed(vs[..vs.len() - 1].to_vec())?)
}

fn dispatch(cmd: Command) -> Result<Outcome, CliError> {
    match cmd {
        Command::Subdivide { input, depth, svg: svg_path, projection, mark_vertices } => {
            let file = format::load_curve_file(&input)?;
            let curve = file.to_curve()?;
            let level = subdivide(&curve, depth)?;
            let polyline = level.polyline()?;
            println!(
                "{}: depth {} -> {} pieces, {} polyline vertices",
                file.name,
                depth,
                level.pieces().len(),
                polyline.vertex_count()
            );
            if let Some(path) = svg_path {
                let control = PLCurve::open(curve.control_points().to_vec())?;
                let doc = svg::render_svg(
                    &[
                        ("control-polygon".to_string(), control),
                        (format!("level-{}", depth), polyline),
                    ],
                    projection,
                    mark_vertices,
                )?;
                report::write_text(&path, &doc)?;
                println!("svg written to {}", path.display());
            }
            Ok(Outcome::Done)
        }
        Command::Angles { input, depth, polyline } => {
            let file = format::load_curve_file(&input)?;
            let pl = if polyline {
                file.to_polyline()?
            } else {
                let curve = file.to_curve()?;
                if file.closed {
                    closed_polyline_at_depth(&curve, depth, 1e-9)?
                } else {
                    subdivide(&curve, depth)?.polyline()?
                }
            };
            let profile = exterior_angles(&pl)?;
            println!(
                "{}: {} angles, sum {}, max {}, degenerate vertices {}",
                file.name,
                profile.angles.len(),
                profile.sum_angles,
                profile.max_angle,
                profile.degenerate_vertices.len()
            );
            if pl.is_closed() {
                println!("total curvature (closed): {}", pl_total_curvature(&pl)?);
            }
            Ok(Outcome::Done)
        }
        Command::CertifySimple { input, max_depth, oracle, per_piece_only, csv } => {
            let file = format::load_curve_file(&input)?;
            let curve = file.to_curve()?;
            let mode = if per_piece_only {
                JunctionMode::PerPieceOnly
            } else {
                JunctionMode::Windowed
            };
            let cert = certify_simple_with(&curve, max_depth, oracle, mode)?;
            print_simplicity(&file.name, &cert);
            if let Some(path) = csv {
                report::write_text(&path, &report::simplicity_csv(&cert))?;
            }
            Ok(match cert.verdict {
                SimplicityVerdict::CertifiedSimple => Outcome::Done,
                SimplicityVerdict::Inconclusive => Outcome::Inconclusive,
            })
        }
        Command::CertifyUnknot { input, max_depth, polyline, closure_tol, epsilon, csv } => {
            let file = format::load_curve_file(&input)?;
            let cert = if polyline {
                let pl = file.to_polyline()?;
                let eps = epsilon.unwrap_or_else(|| default_intersection_epsilon(&pl));
                certify_unknotted_polyline(&pl, eps)?
            } else {
                let curve = file.to_curve()?;
                certify_unknotted(&curve, max_depth, closure_tol)?
            };
            println!(
                "{}: {} (total curvature {}, threshold {})",
                file.name,
                match cert.verdict {
                    UnknotVerdict::CertifiedUnknotted => "certified unknotted",
                    UnknotVerdict::Inconclusive => "inconclusive",
                },
                cert.total_curvature_used,
                cert.threshold
            );
            print_simplicity(&file.name, &cert.simplicity_evidence);
            println!("note: the certificate covers the PL polyline, not the smooth curve");
            if let Some(path) = csv {
                report::write_text(&path, &report::unknot_csv(&cert))?;
            }
            Ok(match cert.verdict {
                UnknotVerdict::CertifiedUnknotted => Outcome::Done,
                UnknotVerdict::Inconclusive => Outcome::Inconclusive,
            })
        }
        Command::Converge { input, metric, from, to, samples, csv } => {
            let file = format::load_curve_file(&input)?;
            let curve = file.to_curve()?;
            let report = match metric {
                MetricArg::Jump => sweep_derivative_jumps(&curve, from, to)?,
                MetricArg::Angle => sweep_exterior_angles(&curve, from, to)?,
                MetricArg::CosDefect => sweep_cos_defect(&curve, from, to)?,
                MetricArg::Hausdorff => sweep_hausdorff(&curve, from, to, samples)?,
            };
            println!(
                "{}: {} over depths {}..={}: log2 slope {} (ci ±{}), residual {}",
                file.name,
                report.metric.name(),
                from,
                to,
                report.log2_slope,
                report.slope_ci_halfwidth,
                report.fit_residual
            );
            if !report.excluded.is_empty() {
                println!("excluded {} zero/noise-floor depths", report.excluded.len());
            }
            if let Some(path) = csv {
                report::write_text(&path, &report::convergence_csv(&report))?;
            }
            Ok(Outcome::Done)
        }
        Command::Hausdorff { input, depth, samples } => {
            let file = format::load_curve_file(&input)?;
            let curve = file.to_curve()?;
            let h = hausdorff_estimate(&curve, depth, samples)?;
            println!(
                "{}: hausdorff estimate at depth {} with {} samples: {}",
                file.name, depth, samples, h
            );
            Ok(Outcome::Done)
        }
    }
}

fn print_simplicity(name: &str, cert: &SimplicityCertificate) {
    println!(
        "{}: simplicity {} at depth {} (max piece sum {}, max window {})",
        name,
        match cert.verdict {
            SimplicityVerdict::CertifiedSimple => "certified",
            SimplicityVerdict::Inconclusive => "inconclusive",
        },
        cert.depth_i,
        cert.max_piece_sum,
        cert.max_window_sum
    );
    println!("junction handling: {}", cert.junction_handling_note);
    if let Some(oracle) = &cert.oracle_cross_check {
        match &oracle.witness {
            Some(w) => println!(
                "oracle: edges {} and {} within epsilon {}",
                w.edge_a, w.edge_b, oracle.epsilon_used
            ),
            None => println!("oracle: no intersection at epsilon {}", oracle.epsilon_used),
        }
    }
}

// Re-exported for integration tests.
pub use format::{parse_curve_file, serialize_curve_file, CurveFile};
pub use report::{convergence_csv, simplicity_csv, unknot_csv};
pub use svg::{render_svg, Projection};

#[cfg(test)]
mod tests {
    use super::*;

    const QUAD: &str = "# a parabola\nbezier q2 degree=2 closed=0\n0 0 0\n2 2 0\n4 0 0\n";

    #[test]
    fn parses_header_and_points() {
        let f = parse_curve_file(QUAD).unwrap();
        assert_eq!(f.name, "q2");
        assert_eq!(f.degree, 2);
        assert!(!f.closed);
        assert_eq!(f.points.len(), 3);
        assert_eq!(f.points[1], Point3::new(2.0, 2.0, 0.0));
    }

    #[test]
    fn missing_points_named_in_error() {
        let text = "bezier q2 degree=2 closed=0\n0 0 0\n2 2 0\n";
        match parse_curve_file(text) {
            Err(CliError::Parse { message, .. }) => {
                assert!(message.contains("1 missing"), "{}", message);
            }
            other => panic!("unexpected {:?}", other),
        }
    }

    #[test]
    fn non_numeric_token_reports_line() {
        let text = "bezier q2 degree=2 closed=0\n0 0 0\n2 x 0\n4 0 0\n";
        match parse_curve_file(text) {
            Err(CliError::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {:?}", other),
        }
    }

    #[test]
    fn duplicate_header_rejected() {
        let text = "bezier a degree=1 closed=0\nbezier b degree=1 closed=0\n0 0 0\n1 0 0\n";
        match parse_curve_file(text) {
            Err(CliError::Parse { line, message }) => {
                assert_eq!(line, 2);
                assert!(message.contains("duplicate"));
            }
            other => panic!("unexpected {:?}", other),
        }
    }

    #[test]
    fn comments_and_blanks_do_not_change_the_parse() {
        let noisy =
            "\n# hello\nbezier q2 degree=2 closed=0\n\n0 0 0  # origin\n2 2 0\n\n4 0 0\n# done\n";
        assert_eq!(parse_curve_file(noisy).unwrap(), parse_curve_file(QUAD).unwrap());
    }

    #[test]
    fn serialize_round_trips() {
        let f = parse_curve_file(QUAD).unwrap();
        let again = parse_curve_file(&serialize_curve_file(&f)).unwrap();
        assert_eq!(f, again);
        // 17-significant-digit coordinates survive.
        let precise = CurveFile {
            name: "p".into(),
            degree: 1,
            points: vec![
                Point3::new(0.12345678901234567, -1.0 / 3.0, 1e-17),
                Point3::new(2.0f64.sqrt(), 0.0, -0.1),
            ],
            closed: false,
        };
        assert_eq!(parse_curve_file(&serialize_curve_file(&precise)).unwrap(), precise);
    }

    #[test]
    fn convergence_csv_rows_round_trip() {
        use curvecert::fixtures;
        let report = sweep_derivative_jumps(&fixtures::parabola_quadratic(), 2, 4).unwrap();
        let csv = convergence_csv(&report);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 4); // header + 3 rows
        assert_eq!(lines[0], "depth,value,log2_value");
        for (row, (depth, value)) in
            lines[1..].iter().zip(report.depths.iter().zip(&report.values))
        {
            let cols: Vec<&str> = row.split(',').collect();
            assert_eq!(cols[0].parse::<u32>().unwrap(), *depth);
            assert_eq!(cols[1].parse::<f64>().unwrap(), *value);
        }
    }

    #[test]
    fn svg_is_deterministic_and_structured() {
        use curvecert::fixtures;
        let control =
            PLCurve::open(fixtures::parabola_quadratic().control_points().to_vec()).unwrap();
        let level =
            subdivide(&fixtures::parabola_quadratic(), 3).unwrap().polyline().unwrap();
        let items = vec![
            ("control-polygon".to_string(), control),
            ("level-3".to_string(), level),
        ];
        let a = render_svg(&items, Projection::Xy, false).unwrap();
        let b = render_svg(&items, Projection::Xy, false).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.matches("<path").count(), 2);
        assert!(a.contains("viewBox"));
        assert!(render_svg(&[], Projection::Xy, false).is_err());
    }
}
