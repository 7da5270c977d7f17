//! Adaptive quadrature with an absolute-error target and a panel cap.

use crate::error::{Error, Result};

/// Hard cap on the number of leaf panels before the integrator gives up.
pub const MAX_PANELS: usize = 1 << 20;

fn simpson(a: f64, fa: f64, b: f64, fb: f64, fm: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

/// Integrates `f` over `[a, b]` by adaptive Simpson bisection until the
/// estimated absolute error is below `tol`.
///
/// The integrand may fail (for example near a singular parameter); its error
/// is propagated. Exceeding [`MAX_PANELS`] reports
/// [`Error::QuadratureDidNotConverge`].
pub fn adaptive_simpson<F>(f: F, a: f64, b: f64, tol: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::InvalidTolerance(tol));
    }
    let fa = f(a)?;
    let fb = f(b)?;
    let m = 0.5 * (a + b);
    let fm = f(m)?;
    let whole = simpson(a, fa, b, fb, fm);
    let mut panels = 1usize;
    recurse(&f, a, fa, b, fb, m, fm, whole, tol, &mut panels)
}

#[allow(clippy::too_many_arguments)]
fn recurse<F>(
    f: &F,
    a: f64,
    fa: f64,
    b: f64,
    fb: f64,
    m: f64,
    fm: f64,
    whole: f64,
    tol: f64,
    panels: &mut usize,
) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm)?;
    let frm = f(rm)?;
    let left = simpson(a, fa, m, fm, flm);
    let right = simpson(m, fm, b, fb, frm);
    let delta = left + right - whole;
    // Standard Richardson factor for Simpson halving.
    if delta.abs() <= 15.0 * tol {
        return Ok(left + right + delta / 15.0);
    }
    *panels += 1;
    if *panels > MAX_PANELS {
        return Err(Error::QuadratureDidNotConverge { panels_used: *panels });
    }
    let l = recurse(f, a, fa, m, fm, lm, flm, left, tol / 2.0, panels)?;
    let r = recurse(f, m, fm, b, fb, rm, frm, right, tol / 2.0, panels)?;
    Ok(l + r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integrates_polynomial() {
        let q = adaptive_simpson(|x| Ok(x * x), 0.0, 1.0, 1e-10).unwrap();
        assert!((q - 1.0 / 3.0).abs() < 1e-10);
    }

    #[test]
    fn integrates_oscillatory() {
        let q = adaptive_simpson(|x| Ok(x.sin()), 0.0, std::f64::consts::PI, 1e-9).unwrap();
        assert!((q - 2.0).abs() < 1e-8);
    }

    #[test]
    fn tolerance_must_be_positive() {
        assert!(matches!(
            adaptive_simpson(Ok, 0.0, 1.0, 0.0),
            Err(Error::InvalidTolerance(_))
        ));
    }

    #[test]
    fn integrand_errors_propagate() {
        let res = adaptive_simpson(
            |x| {
                if x > 0.4 && x < 0.6 {
                    Err(Error::NearSingular { t: x, derivative_norm: 0.0 })
                } else {
                    Ok(x)
                }
            },
            0.0,
            1.0,
            1e-8,
        );
        assert!(matches!(res, Err(Error::NearSingular { .. })));
    }

    #[test]
    fn panel_cap_reported_on_hostile_integrand() {
        // An unreachable tolerance on a fast oscillation forces splitting
        // everywhere until the panel cap trips.
        let res = adaptive_simpson(|x| Ok((1e6 * x).sin()), 0.0, 1.0, 1e-300);
        assert!(matches!(res, Err(Error::QuadratureDidNotConverge { .. })));
    }
}
