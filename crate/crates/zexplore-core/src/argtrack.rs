//! Continuous argument tracking along vertical lines in the complex plane.
//!
//! The arguments of `zeta`, `zeta'`, `Gamma` (and their values at the
//! reflected point `1 - sigma + i rho`) are tracked as continuous functions
//! of `rho` at fixed `sigma`, starting just above the real axis.  Where the
//! underlying value passes through zero the argument genuinely jumps by a
//! multiple of `pi`; those events are detected, classified and recorded
//! rather than smoothed over.

use alloc::vec::Vec;

use crate::complexfn::{self, TWO_PI};
use crate::{ComplexPoint, EvalConfig, EvalError};

const PI: f64 = core::f64::consts::PI;
const FRAC_PI_2: f64 = core::f64::consts::FRAC_PI_2;
const LN_TWO_PI: f64 = 1.8378770664093455;

/// Ordinate at which every track is anchored.
pub const RHO_START: f64 = 1e-3;
/// Nominal advance per step; halved adaptively near rapid variation.
const BASE_STEP: f64 = 0.05;
/// Once halving reaches this width the variation is classified as a jump.
const STEP_FLOOR: f64 = 1e-9;
/// Offset used to sample cleanly on both sides of a detected jump.
const PROBE: f64 = 1e-5;

/// Which continuous argument to track, all as functions of `rho` at fixed
/// `sigma`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AngleKind {
    /// `arg zeta(sigma + i rho)` — the angle `alpha`.
    Alpha,
    /// `arg zeta'(sigma + i rho)` — the angle `beta`.
    Beta,
    /// `arg Gamma(sigma + i rho)`.
    GammaArg,
    /// `Im LogGamma(sigma + i rho)` — identical to `GammaArg` but evaluated
    /// through the branch-continuous logarithm.
    Theta,
    /// `arg zeta(1 - sigma + i rho)` — the angle `alpha~`.
    AlphaTilde,
    /// `arg zeta'(1 - sigma + i rho)` — the angle `beta~`.
    BetaTilde,
}

/// A detected discontinuity of the tracked argument.
#[derive(Debug, Clone, Copy)]
pub struct JumpEvent {
    /// Ordinate of the discontinuity (center of the collapsed step).
    pub rho: f64,
    /// The jump rounded to its integer multiple of `pi` (signed).
    pub multiple_of_pi: i32,
    /// `|multiple_of_pi| mod 2`: odd jumps flip the direction vector.
    pub parity: i8,
}

/// A continuous-argument track along a vertical line.
#[derive(Debug, Clone)]
pub struct ArgTrace {
    pub sigma: f64,
    pub rho_samples: Vec<f64>,
    /// Continuous angle at each sample.
    pub angle_samples: Vec<f64>,
    /// Principal argument of the underlying value at each sample.
    pub principal_samples: Vec<f64>,
    pub jump_events: Vec<JumpEvent>,
}

impl ArgTrace {
    /// Integer `k` with `angle = principal + k pi` at sample `i`.
    pub fn k_at(&self, i: usize) -> i64 {
        libm::round((self.angle_samples[i] - self.principal_samples[i]) / PI) as i64
    }
}

/// Principal argument of the tracked quantity at one point.
fn principal_of(
    kind: AngleKind,
    sigma: f64,
    rho: f64,
    cfg: &EvalConfig,
) -> Result<f64, EvalError> {
    let p = ComplexPoint::new(sigma, rho);
    let v = match kind {
        AngleKind::Alpha => complexfn::zeta(p, cfg)?,
        AngleKind::Beta => complexfn::zeta_d1(p, cfg)?,
        AngleKind::GammaArg => complexfn::gamma(p)?,
        AngleKind::Theta => {
            return Ok(wrap_principal(complexfn::log_gamma(p)?.im));
        }
        AngleKind::AlphaTilde => complexfn::zeta(p.reflect(), cfg)?,
        AngleKind::BetaTilde => complexfn::zeta_d1(p.reflect(), cfg)?,
    };
    Ok(complexfn::principal_arg(v))
}

/// Map an angle into `(-pi, pi]`.
fn wrap_principal(x: f64) -> f64 {
    let mut y = x - TWO_PI * libm::round(x / TWO_PI);
    if y <= -PI {
        y += TWO_PI;
    }
    y
}

/// Wrap a difference of principal arguments into `(-pi, pi]`.
fn wrap_diff(d: f64) -> f64 {
    if d > PI {
        d - TWO_PI
    } else if d <= -PI {
        d + TWO_PI
    } else {
        d
    }
}

/// Track a continuous argument from [`RHO_START`] through each requested
/// ordinate.  `rho_samples` must be strictly increasing and at least
/// [`RHO_START`].
///
/// The anchor at the start is the principal argument mapped into
/// `(-pi/2, 3 pi/2]`, so a value on the negative real axis anchors at
/// `+pi` rather than an arbitrary sign of `pi`.
pub fn track(
    kind: AngleKind,
    sigma: f64,
    rho_samples: &[f64],
    cfg: &EvalConfig,
) -> Result<ArgTrace, EvalError> {
    if rho_samples.is_empty() {
        return Err(EvalError::Domain("at least one sample ordinate is required"));
    }
    let mut prev = f64::NEG_INFINITY;
    for &t in rho_samples {
        if !(t >= RHO_START) {
            return Err(EvalError::Domain("sample ordinates must be >= the track anchor"));
        }
        if t <= prev {
            return Err(EvalError::Domain("sample ordinates must be strictly increasing"));
        }
        prev = t;
    }

    let mut cur = RHO_START;
    let mut p_prev = principal_of(kind, sigma, cur, cfg)?;
    let mut angle = if p_prev <= -FRAC_PI_2 {
        p_prev + TWO_PI
    } else {
        p_prev
    };

    let mut trace = ArgTrace {
        sigma,
        rho_samples: Vec::with_capacity(rho_samples.len()),
        angle_samples: Vec::with_capacity(rho_samples.len()),
        principal_samples: Vec::with_capacity(rho_samples.len()),
        jump_events: Vec::new(),
    };

    for &target in rho_samples {
        while cur < target {
            let mut step = BASE_STEP.min(target - cur);
            loop {
                let p_next = principal_of(kind, sigma, cur + step, cfg)?;
                let d = wrap_diff(p_next - p_prev);
                if d.abs() < FRAC_PI_2 {
                    angle += d;
                    cur += step;
                    p_prev = p_next;
                    break;
                }
                if step <= STEP_FLOOR {
                    // The variation survives at the narrowest step: a genuine
                    // discontinuity.  Classify it from clean probe points on
                    // either side, where the argument is quiet and the
                    // deviation of the jump from a pi-multiple is far above
                    // evaluation noise.
                    let rho_j = cur + step / 2.0;
                    let pm = principal_of(kind, sigma, rho_j - PROBE, cfg)?;
                    let pp = principal_of(kind, sigma, rho_j + PROBE, cfg)?;
                    let dj = wrap_diff(pp - pm);
                    if dj.abs() < FRAC_PI_2 {
                        return Err(EvalError::StepCollapse { rho: rho_j });
                    }
                    let back = wrap_diff(pm - p_prev);
                    // The probe difference lies in (-pi, pi], so the jump is
                    // a single direction flip up to smooth drift.  A flip of
                    // +pi and -pi describe the same sign change; the branch
                    // convention counts every flip as a drop of pi so branch
                    // indices accumulate consistently along the track.
                    let raw = libm::round(dj / PI) as i32;
                    let drift = dj - f64::from(raw) * PI;
                    let multiple = if raw.rem_euclid(2) == 1 { -1 } else { raw };
                    angle += back + f64::from(multiple) * PI + drift;
                    trace.jump_events.push(JumpEvent {
                        rho: rho_j,
                        multiple_of_pi: multiple,
                        parity: multiple.rem_euclid(2) as i8,
                    });
                    cur = rho_j + PROBE;
                    p_prev = pp;
                    break;
                }
                step /= 2.0;
            }
        }
        if cur > target {
            // A jump advanced past the requested sample by at most the probe
            // width; the stretch back to it is smooth, so correct locally.
            let p_t = principal_of(kind, sigma, target, cfg)?;
            let a_t = angle + wrap_diff(p_t - p_prev);
            trace.rho_samples.push(target);
            trace.angle_samples.push(a_t);
            trace.principal_samples.push(p_t);
        } else {
            trace.rho_samples.push(target);
            trace.angle_samples.push(angle);
            trace.principal_samples.push(p_prev);
        }
    }
    Ok(trace)
}

/// Continuous angle at a single ordinate (a one-sample track).
pub fn tracked_angle_at(
    kind: AngleKind,
    sigma: f64,
    rho: f64,
    cfg: &EvalConfig,
) -> Result<f64, EvalError> {
    let t = track(kind, sigma, &[rho], cfg)?;
    Ok(t.angle_samples[0])
}

/// The full polar decomposition at one point: moduli of zeta and its first
/// two derivatives at `s` and of zeta and its derivative at the reflected
/// point, together with the continuous angles and their pi-offsets from the
/// principal branch.
#[derive(Debug, Clone, Copy)]
pub struct PolarBundle {
    pub abs_z: f64,
    pub abs_z1: f64,
    pub abs_z2: f64,
    pub abs_tz: f64,
    pub abs_tz1: f64,
    pub alpha: f64,
    pub beta: f64,
    pub gamma_arg: f64,
    pub theta: f64,
    pub alpha_tilde: f64,
    pub beta_tilde: f64,
    /// `alpha = principal + k_alpha * pi`.
    pub k_alpha: i64,
    pub k_alpha_tilde: i64,
}

/// Track the four zeta-family angles to `s` and assemble the polar bundle.
pub fn polar_bundle(s: ComplexPoint, cfg: &EvalConfig) -> Result<PolarBundle, EvalError> {
    let jet_s = complexfn::zeta_jet(s, cfg)?;
    let jet_r = complexfn::zeta_jet(s.reflect(), cfg)?;
    let theta = complexfn::log_gamma(s)?.im;

    let alpha_t = track(AngleKind::Alpha, s.sigma, &[s.rho], cfg)?;
    let beta = tracked_angle_at(AngleKind::Beta, s.sigma, s.rho, cfg)?;
    let alpha_tilde_t = track(AngleKind::AlphaTilde, s.sigma, &[s.rho], cfg)?;
    let beta_tilde = tracked_angle_at(AngleKind::BetaTilde, s.sigma, s.rho, cfg)?;

    Ok(PolarBundle {
        abs_z: complexfn::modulus(jet_s.v),
        abs_z1: complexfn::modulus(jet_s.d1),
        abs_z2: complexfn::modulus(jet_s.d2),
        abs_tz: complexfn::modulus(jet_r.v),
        abs_tz1: complexfn::modulus(jet_r.d1),
        alpha: alpha_t.angle_samples[0],
        beta,
        gamma_arg: theta,
        theta,
        alpha_tilde: alpha_tilde_t.angle_samples[0],
        beta_tilde,
        k_alpha: alpha_t.k_at(0),
        k_alpha_tilde: alpha_tilde_t.k_at(0),
    })
}

/// Closed form for the angle sum `alpha + alpha~` on a vertical line:
///
/// `-Im LogGamma(s) - arctan((cos(pi sigma) - 1) sinh(pi rho/2)
///   / (cosh(pi rho/2) sin(pi sigma))) + rho ln(2 pi) + k pi`.
///
/// Undefined on the lines `sigma = 0` and `sigma = 1`.
pub fn alpha_p_closed(s: ComplexPoint, k: i64, _cfg: &EvalConfig) -> Result<f64, EvalError> {
    let sin_ps = libm::sin(PI * s.sigma);
    if sin_ps.abs() < 1e-12 {
        return Err(EvalError::Domain(
            "closed angle-sum form is undefined at sigma = 0 and sigma = 1",
        ));
    }
    let theta = complexfn::log_gamma(s)?.im;
    let num = (libm::cos(PI * s.sigma) - 1.0) * libm::sinh(PI * s.rho / 2.0);
    let den = libm::cosh(PI * s.rho / 2.0) * sin_ps;
    Ok(-theta - libm::atan(num / den) + s.rho * LN_TWO_PI + k as f64 * PI)
}

/// Recover the integer `k` separating a tracked angle sum from the k-free
/// closed form.  Fails with [`EvalError::NonIntegerResidual`] if the two do
/// not differ by a near-exact multiple of `pi`.
pub fn winding_k(tracked_sum: f64, closed_k_free: f64) -> Result<i64, EvalError> {
    let r = (tracked_sum - closed_k_free) / PI;
    let k = libm::round(r);
    if (r - k).abs() > 1e-3 {
        return Err(EvalError::NonIntegerResidual { residual_over_pi: r });
    }
    Ok(k as i64)
}

/// Closed form for the continuous `alpha` on the critical line, modulo
/// `2 pi` consistent with the tracked anchor:
///
/// `-theta/2 + rho ln(2 pi)/2 - 9 pi/8 + (pi/2 - arctan(e^{-pi rho}))/2`
///
/// with `theta = Im LogGamma(1/2 + i rho)` continuous.  Valid below the
/// first zero crossing and, modulo `pi`, everywhere.
pub fn alpha_closed_critical(rho: f64) -> Result<f64, EvalError> {
    let theta = complexfn::log_gamma(ComplexPoint::new(0.5, rho))?.im;
    Ok(-theta / 2.0 + rho * LN_TWO_PI / 2.0 - 9.0 * PI / 8.0
        + (FRAC_PI_2 - libm::atan(libm::exp(-PI * rho))) / 2.0)
}

/// Comparison of the tracked `-alpha` on the critical line against the
/// closed Gamma-based expression
///
/// `theta/2 - rho ln(2 pi)/2 - pi/8 + arctan(e^{-pi rho})/2 - pi`,
///
/// evaluated both with `theta` continuous and with `theta` replaced by the
/// principal argument of `Gamma`.
#[derive(Debug, Clone, Copy)]
pub struct BrentComparison {
    pub rho: f64,
    pub tracked_neg_alpha: f64,
    pub closed_continuous: f64,
    pub closed_principal: f64,
}

pub fn brent_compare(rho: f64, cfg: &EvalConfig) -> Result<BrentComparison, EvalError> {
    let s = ComplexPoint::new(0.5, rho);
    let theta_c = complexfn::log_gamma(s)?.im;
    let theta_p = wrap_principal(theta_c);
    let closed = |theta: f64| {
        theta / 2.0 - rho * LN_TWO_PI / 2.0 - PI / 8.0 + libm::atan(libm::exp(-PI * rho)) / 2.0
            - PI
    };
    let alpha = tracked_angle_at(AngleKind::Alpha, 0.5, rho, cfg)?;
    Ok(BrentComparison {
        rho,
        tracked_neg_alpha: -alpha,
        closed_continuous: closed(theta_c),
        closed_principal: closed(theta_p),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const CFG: EvalConfig = EvalConfig {
        euler_maclaurin_terms: 20,
        bernoulli_terms: 10,
        target_abs_tol: 1e-12,
    };

    #[test]
    fn theta_track_matches_continuous_loggamma() {
        let rho = 30.0;
        let tracked = tracked_angle_at(AngleKind::Theta, 0.3, rho, &CFG).unwrap();
        let direct = complexfn::log_gamma(ComplexPoint::new(0.3, rho))
            .unwrap()
            .im;
        assert!((tracked - direct).abs() < 1e-9);
        let via_gamma = tracked_angle_at(AngleKind::GammaArg, 0.3, rho, &CFG).unwrap();
        assert!((via_gamma - direct).abs() < 1e-9);
    }

    #[test]
    fn beta_anchor_on_critical_line() {
        // zeta'(1/2) is negative real, so the anchor sits just above +pi.
        let b = tracked_angle_at(AngleKind::Beta, 0.5, RHO_START, &CFG).unwrap();
        assert!((b - 3.1456736579604116).abs() < 1e-8);
    }

    #[test]
    fn alpha_jumps_down_by_pi_at_first_zero() {
        let t = track(AngleKind::Alpha, 0.5, &[14.0, 14.2], &CFG).unwrap();
        assert_eq!(t.jump_events.len(), 1);
        let j = &t.jump_events[0];
        assert!((j.rho - 14.134725).abs() < 1e-4);
        assert_eq!(j.multiple_of_pi, -1);
        assert_eq!(j.parity, 1);
        // Left limit of alpha just below the zero.
        let left = tracked_angle_at(AngleKind::Alpha, 0.5, 14.134725 - 1e-6, &CFG).unwrap();
        assert!((left / PI - 1.550253).abs() < 1e-3);
    }

    #[test]
    fn beta_is_continuous_through_zeros() {
        let t = track(AngleKind::Beta, 0.5, &[25.2], &CFG).unwrap();
        assert!(t.jump_events.is_empty());
    }

    #[test]
    fn angle_sum_matches_closed_form_with_k2() {
        let s = ComplexPoint::new(1.0 / 3.0, 5.0);
        let a = tracked_angle_at(AngleKind::Alpha, s.sigma, s.rho, &CFG).unwrap();
        let at = tracked_angle_at(AngleKind::AlphaTilde, s.sigma, s.rho, &CFG).unwrap();
        let free = alpha_p_closed(s, 0, &CFG).unwrap();
        let k = winding_k(a + at, free).unwrap();
        assert_eq!(k, 2);
        let closed = alpha_p_closed(s, k, &CFG).unwrap();
        assert!((a + at - closed).abs() < 1e-6);
    }

    #[test]
    fn closed_sum_rejects_boundary_lines() {
        assert!(alpha_p_closed(ComplexPoint::new(0.0, 5.0), 0, &CFG).is_err());
        assert!(alpha_p_closed(ComplexPoint::new(1.0, 5.0), 0, &CFG).is_err());
    }

    #[test]
    fn brent_agreement_below_first_zero() {
        let c = brent_compare(3.0, &CFG).unwrap();
        assert!((c.tracked_neg_alpha - c.closed_continuous).abs() < 1e-6);
    }

    #[test]
    fn brent_offset_is_pi_multiple_above_first_zero() {
        let c = brent_compare(15.0, &CFG).unwrap();
        let d = (c.tracked_neg_alpha - c.closed_continuous) / PI;
        assert!((d - libm::round(d)).abs() < 1e-6);
        assert!((d - 1.0).abs() < 1e-6);
    }

    #[test]
    fn polar_bundle_consistency() {
        let b = polar_bundle(ComplexPoint::new(0.5, 14.2), &CFG).unwrap();
        // Tracked angle and principal differ by an exact multiple of pi.
        let p = b.alpha - b.k_alpha as f64 * PI;
        assert!(p.abs() <= PI + 1e-12);
        assert!(b.abs_z > 0.0 && b.abs_z1 > 0.0);
        // On the critical line the reflected modulus equals the direct one.
        assert!((b.abs_z - b.abs_tz).abs() < 1e-9);
    }

    #[test]
    fn rejects_bad_sample_lists() {
        assert!(track(AngleKind::Alpha, 0.5, &[], &CFG).is_err());
        assert!(track(AngleKind::Alpha, 0.5, &[0.0], &CFG).is_err());
        assert!(track(AngleKind::Alpha, 0.5, &[2.0, 1.0], &CFG).is_err());
    }
}
