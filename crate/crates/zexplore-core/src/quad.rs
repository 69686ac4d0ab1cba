//! Adaptive Simpson quadrature for real integrands that may fail.
//!
//! The integrand returns `Result<f64, EvalError>` so evaluation failures
//! (poles, accuracy loss) abort the integration instead of being silently
//! folded into the sum.

use crate::EvalError;

const MAX_DEPTH: u32 = 40;

/// Integrate `f` over `[a, b]` to absolute tolerance `abs_tol` with adaptive
/// Simpson subdivision and one Richardson extrapolation step per panel.
pub fn integrate<F>(f: &mut F, a: f64, b: f64, abs_tol: f64) -> Result<f64, EvalError>
where
    F: FnMut(f64) -> Result<f64, EvalError>,
{
    if !(abs_tol > 0.0) || !a.is_finite() || !b.is_finite() {
        return Err(EvalError::Domain("integration bounds and tolerance must be finite and positive"));
    }
    if a == b {
        return Ok(0.0);
    }
    let m = (a + b) / 2.0;
    let fa = f(a)?;
    let fm = f(m)?;
    let fb = f(b)?;
    let whole = simpson(a, b, fa, fm, fb);
    panel(f, a, b, fa, fm, fb, whole, abs_tol, MAX_DEPTH)
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn panel<F>(
    f: &mut F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    abs_tol: f64,
    depth: u32,
) -> Result<f64, EvalError>
where
    F: FnMut(f64) -> Result<f64, EvalError>,
{
    let m = (a + b) / 2.0;
    let lm = (a + m) / 2.0;
    let rm = (m + b) / 2.0;
    let flm = f(lm)?;
    let frm = f(rm)?;
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if depth == 0 {
        return Err(EvalError::Accuracy {
            estimate: delta.abs(),
            tol: abs_tol,
        });
    }
    if delta.abs() <= 15.0 * abs_tol {
        // Richardson correction: Simpson-on-halves plus the O(h^4) estimate.
        return Ok(left + right + delta / 15.0);
    }
    let half_tol = abs_tol / 2.0;
    let l = panel(f, a, m, fa, flm, fm, left, half_tol, depth - 1)?;
    let r = panel(f, m, b, fm, frm, fb, right, half_tol, depth - 1)?;
    Ok(l + r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integrates_polynomial_exactly() {
        let mut f = |x: f64| Ok(x * x * x - 2.0 * x + 1.0);
        // Antiderivative: x^4/4 - x^2 + x over [0, 2] -> 4 - 4 + 2 = 2.
        let v = integrate(&mut f, 0.0, 2.0, 1e-12).unwrap();
        assert!((v - 2.0).abs() < 1e-12);
    }

    #[test]
    fn integrates_oscillatory() {
        let mut f = |x: f64| Ok(libm::sin(10.0 * x));
        let v = integrate(&mut f, 0.0, core::f64::consts::PI, 1e-10).unwrap();
        let exact = (1.0 - libm::cos(10.0 * core::f64::consts::PI)) / 10.0;
        assert!((v - exact).abs() < 1e-9);
    }

    #[test]
    fn propagates_integrand_error() {
        let mut f = |x: f64| {
            if x > 0.5 {
                Err(EvalError::Domain("test abort"))
            } else {
                Ok(x)
            }
        };
        assert!(integrate(&mut f, 0.0, 1.0, 1e-9).is_err());
    }

    #[test]
    fn zero_width_interval() {
        let mut f = |_x: f64| Ok(3.0);
        assert_eq!(integrate(&mut f, 1.0, 1.0, 1e-9).unwrap(), 0.0);
    }
}
