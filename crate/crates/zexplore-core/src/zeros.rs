//! Zero location on the critical line, half-zeros of the individual
//! components, branch counting at zeros, and the algebraic conditions a
//! zero imposes on the derivative components.

use alloc::vec::Vec;

use crate::argtrack::{alpha_closed_critical, tracked_angle_at, AngleKind};
use crate::complexfn::{self, TWO_PI};
use crate::symbols::{build_symbols, SymbolSet};
use crate::{ComplexPoint, ComplexValue, EvalConfig, EvalError};

const PI: f64 = core::f64::consts::PI;

/// Scan step used when bracketing sign changes.
const SCAN_STEP: f64 = 0.05;
/// Bisection stops once the bracket is narrower than this.
const BISECT_TOL: f64 = 1e-9;
/// A located component root this close to a vanishing partner component is
/// a full zero, not a half-zero.
const FULL_ZERO_EXCLUSION: f64 = 1e-6;

/// Classification of a located root.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZeroKind {
    /// Both components vanish.
    Full,
    /// The real component vanishes (the value is purely imaginary there).
    RealHalf,
    /// The imaginary component vanishes (the value is real there).
    ImagHalf,
}

impl ZeroKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ZeroKind::Full => "full",
            ZeroKind::RealHalf => "real-half",
            ZeroKind::ImagHalf => "imag-half",
        }
    }
}

/// One located root on the critical line.
#[derive(Debug, Clone, Copy)]
pub struct ZeroRecord {
    pub rho0: f64,
    pub kind: ZeroKind,
    /// Branch index read from the tracked argument: full zeros satisfy
    /// `alpha - beta -> (n + 1/2) pi` from the left; half-zeros pin the
    /// tracked `alpha` to `(n + 1/2) pi` (real) or `n pi` (imaginary).
    pub n: i32,
    /// Magnitude of the vanishing quantity at the located ordinate.
    pub residual_abs_zeta: f64,
    /// Tracked derivative-direction angle at the root.
    pub beta0: f64,
    /// Imaginary-component half-zeros with a negative real part whose real
    /// part is increasing in `rho`; empty on the scanned range but tracked
    /// as a distinguished class.
    pub anomalous: bool,
}

/// Rotated real profile whose simple sign changes are the full zeros: the
/// value rotated back by the closed-form continuous argument.
fn rotated_profile(rho: f64, cfg: &EvalConfig) -> Result<f64, EvalError> {
    let a = alpha_closed_critical(rho)?;
    let z = complexfn::zeta(ComplexPoint::new(0.5, rho), cfg)?;
    let rot = ComplexValue::new(libm::cos(a), -libm::sin(a));
    Ok((rot * z).re)
}

fn bisect<F>(f: &mut F, mut lo: f64, mut hi: f64) -> Result<f64, EvalError>
where
    F: FnMut(f64) -> Result<f64, EvalError>,
{
    let mut flo = f(lo)?;
    loop {
        if hi - lo < BISECT_TOL {
            return Ok(0.5 * (lo + hi));
        }
        let mid = 0.5 * (lo + hi);
        let fmid = f(mid)?;
        if (flo <= 0.0) == (fmid <= 0.0) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
}

/// Locate the full zeros with ordinates in `[rho_lo, rho_hi]`.
pub fn find_zeros(
    rho_lo: f64,
    rho_hi: f64,
    cfg: &EvalConfig,
) -> Result<Vec<ZeroRecord>, EvalError> {
    if !(rho_lo > 0.0 && rho_hi > rho_lo) {
        return Err(EvalError::Domain("zero scan needs 0 < rho_lo < rho_hi"));
    }
    let mut out = Vec::new();
    let mut prev_r = rho_lo;
    let mut prev_u = rotated_profile(prev_r, cfg)?;
    let mut r = rho_lo;
    while r < rho_hi {
        r = (r + SCAN_STEP).min(rho_hi);
        let u = rotated_profile(r, cfg)?;
        if (prev_u <= 0.0) != (u <= 0.0) {
            let rho0 = bisect(&mut |x| rotated_profile(x, cfg), prev_r, r)?;
            out.push(full_zero_record(rho0, cfg)?);
        }
        prev_r = r;
        prev_u = u;
    }
    Ok(out)
}

fn full_zero_record(rho0: f64, cfg: &EvalConfig) -> Result<ZeroRecord, EvalError> {
    let z = complexfn::zeta(ComplexPoint::new(0.5, rho0), cfg)?;
    let ab = left_limit_alpha_minus_beta(rho0, cfg)?;
    let n = libm::round(ab / PI - 0.5) as i32;
    let beta0 = tracked_angle_at(AngleKind::Beta, 0.5, rho0, cfg)?;
    Ok(ZeroRecord {
        rho0,
        kind: ZeroKind::Full,
        n,
        residual_abs_zeta: complexfn::modulus(z),
        beta0,
        anomalous: false,
    })
}

/// Left-sided limit of the tracked `alpha - beta` approaching an ordinate
/// (sampled just below it, before the jump the argument takes there).
pub fn left_limit_alpha_minus_beta(rho0: f64, cfg: &EvalConfig) -> Result<f64, EvalError> {
    let r = rho0 - 1e-6;
    let a = tracked_angle_at(AngleKind::Alpha, 0.5, r, cfg)?;
    let b = tracked_angle_at(AngleKind::Beta, 0.5, r, cfg)?;
    Ok(a - b)
}

/// Locate half-zeros (single-component roots) with ordinates in
/// `[rho_lo, rho_hi]`, excluding full zeros.
pub fn find_half_zeros(
    rho_lo: f64,
    rho_hi: f64,
    cfg: &EvalConfig,
) -> Result<Vec<ZeroRecord>, EvalError> {
    if !(rho_lo > 0.0 && rho_hi > rho_lo) {
        return Err(EvalError::Domain("zero scan needs 0 < rho_lo < rho_hi"));
    }
    let mut out = Vec::new();
    for kind in [ZeroKind::RealHalf, ZeroKind::ImagHalf] {
        let mut component = |r: f64| -> Result<f64, EvalError> {
            let z = complexfn::zeta(ComplexPoint::new(0.5, r), cfg)?;
            Ok(match kind {
                ZeroKind::RealHalf => z.re,
                _ => z.im,
            })
        };
        let mut prev_r = rho_lo;
        let mut prev_c = component(prev_r)?;
        let mut r = rho_lo;
        while r < rho_hi {
            r = (r + SCAN_STEP).min(rho_hi);
            let c = component(r)?;
            if (prev_c <= 0.0) != (c <= 0.0) {
                let rho0 = bisect(&mut component, prev_r, r)?;
                if let Some(rec) = half_zero_record(rho0, kind, cfg)? {
                    out.push(rec);
                }
            }
            prev_r = r;
            prev_c = c;
        }
    }
    out.sort_by(|a, b| a.rho0.partial_cmp(&b.rho0).expect("finite ordinates"));
    Ok(out)
}

fn half_zero_record(
    rho0: f64,
    kind: ZeroKind,
    cfg: &EvalConfig,
) -> Result<Option<ZeroRecord>, EvalError> {
    let jet = complexfn::zeta_jet(ComplexPoint::new(0.5, rho0), cfg)?;
    let z = jet.v;
    let (vanishing, other) = match kind {
        ZeroKind::RealHalf => (z.re, z.im),
        _ => (z.im, z.re),
    };
    if other.abs() < FULL_ZERO_EXCLUSION {
        // Both components vanish: this is a full zero, not a half-zero.
        return Ok(None);
    }
    let alpha = tracked_angle_at(AngleKind::Alpha, 0.5, rho0, cfg)?;
    let n = match kind {
        ZeroKind::RealHalf => libm::round(alpha / PI - 0.5) as i32,
        _ => libm::round(alpha / PI) as i32,
    };
    let beta0 = tracked_angle_at(AngleKind::Beta, 0.5, rho0, cfg)?;
    // Along the line, d(Re)/drho is minus the imaginary part of the
    // s-derivative.
    let anomalous = kind == ZeroKind::ImagHalf && z.re < 0.0 && -jet.d1.im > 0.0;
    Ok(Some(ZeroRecord {
        rho0,
        kind,
        n,
        residual_abs_zeta: vanishing.abs(),
        beta0,
        anomalous,
    }))
}

/// Residuals of the algebraic conditions a zero imposes on the first
/// derivative at the zero and at its reflected partner.
///
/// The first eight fields are equation residuals expected to vanish at any
/// zero; the branch fields measure which root of the direction-tangent
/// quadratic the derivative follows; the final fields are the closed
/// double-angle form (exact for critical-line zeros) and its large-ordinate
/// asymptotic form.
#[derive(Debug, Clone, Copy)]
pub struct ZeroConditions {
    pub mag_sym: f64,
    pub mag_anti: f64,
    pub comp_r: f64,
    pub comp_i: f64,
    pub beta_map: f64,
    pub beta_map_inv: f64,
    pub beta_sum_gamma: f64,
    pub beta_sum_trig: f64,
    pub branch_minus_residual: f64,
    pub branch_plus_residual: f64,
    pub tan_two_beta: f64,
    pub tan_two_beta_asy: f64,
}

impl ZeroConditions {
    /// Largest of the eight equation residuals.
    pub fn max_equation_residual(&self) -> f64 {
        self.mag_sym
            .max(self.mag_anti)
            .max(self.comp_r)
            .max(self.comp_i)
            .max(self.beta_map)
            .max(self.beta_map_inv)
            .max(self.beta_sum_gamma)
            .max(self.beta_sum_trig)
    }
}

fn rel(l: f64, r: f64) -> f64 {
    (l - r).abs() / l.abs().max(r.abs()).max(1e-300)
}

/// Evaluate the zero conditions from derivative values supplied externally:
/// `dval` is the s-derivative at the zero, `tdval` the s-derivative at the
/// reflected point.  Works for any function satisfying the reflection
/// structure (the constructed solution reuses it).
pub fn zero_conditions_at(
    dval: ComplexValue,
    tdval: ComplexValue,
    sym: &SymbolSet,
) -> ZeroConditions {
    let (d_r, d_i) = (dval.re, dval.im);
    let (td_r, td_i) = (tdval.re, tdval.im);
    let ps = sym.pi_sigma;
    let (g1, g2, c0) = (sym.g1, sym.g2, sym.c0);
    let ga2 = sym.gamma_abs * sym.gamma_abs;
    let d_norm = dval.norm_sqr();

    let mag_sym = rel(d_norm, 2.0 * (d_i * td_i - d_r * td_r) * ps / g2);
    let mag_anti = rel(d_norm, -2.0 * (d_i * td_r + d_r * td_i) * ps / g1);
    let comp_r = rel(d_r, -ps * (td_i * g1 + td_r * g2) / (8.0 * ga2 * c0));
    let comp_i = rel(d_i, ps * (td_i * g2 - td_r * g1) / (8.0 * ga2 * c0));

    let tb = d_i / d_r;
    let tbt = td_i / td_r;
    let beta_map = rel(tbt, -(g2 * tb - g1) / (tb * g1 + g2));
    let beta_map_inv = rel(tb, (g1 - tbt * g2) / (tbt * g1 + g2));

    let ebb = (dval / complexfn::modulus(dval)) * (tdval / complexfn::modulus(tdval));
    let gn = libm::hypot(g1, g2);
    let beta_sum_gamma = (ebb.im * g2 - ebb.re * g1).abs() / gn;
    let tt = libm::tan(PI * sym.sigma / 2.0) * libm::tanh(PI * sym.rho / 2.0);
    let trt = libm::tan(sym.rho_theta);
    let num = tt + trt;
    let den = 1.0 - tt * trt;
    let beta_sum_trig = (ebb.im * den - ebb.re * num).abs() / libm::hypot(num, den);

    let root = libm::hypot(g1, g2);
    let branch_minus_residual = rel(tb, (-g2 - root) / g1);
    let branch_plus_residual = rel(tb, (-g2 + root) / g1);

    let e_ib = dval / complexfn::modulus(dval);
    let e2 = e_ib * e_ib;
    let th = libm::tanh(PI * sym.rho / 2.0);
    let num2 = th + trt;
    let den2 = 1.0 - trt * th;
    let tan_two_beta = (e2.im * den2 - e2.re * num2).abs() / libm::hypot(num2, den2);
    let t_asy = PI * sym.sigma / 2.0 + sym.rho_theta;
    let tan_two_beta_asy = (e2.im * libm::cos(t_asy) - e2.re * libm::sin(t_asy)).abs();

    ZeroConditions {
        mag_sym,
        mag_anti,
        comp_r,
        comp_i,
        beta_map,
        beta_map_inv,
        beta_sum_gamma,
        beta_sum_trig,
        branch_minus_residual,
        branch_plus_residual,
        tan_two_beta,
        tan_two_beta_asy,
    }
}

/// Zero conditions for the canonical function itself at `s0`.
pub fn zero_conditions_zeta(
    s0: ComplexPoint,
    cfg: &EvalConfig,
) -> Result<ZeroConditions, EvalError> {
    let sym = build_symbols(s0, cfg)?;
    let d = complexfn::zeta_jet(s0, cfg)?.d1;
    let td = complexfn::zeta_jet(s0.reflect(), cfg)?.d1;
    Ok(zero_conditions_at(d, td, &sym))
}

/// Ordinate in `[6, 6.5]` where the critical-line scale factor has its pole
/// (its reciprocal crosses zero).
pub fn f_pole_ordinate(cfg: &EvalConfig) -> Result<f64, EvalError> {
    let _ = cfg;
    let e_of = |rho: f64| -> Result<f64, EvalError> {
        let psi = complexfn::digamma(ComplexPoint::new(0.5, rho))?;
        Ok(2.0 * libm::log(TWO_PI) - 2.0 * psi.re + PI / libm::cosh(PI * rho))
    };
    let mut lo = 6.0;
    let mut hi = 6.5;
    let flo = e_of(lo)?;
    let fhi = e_of(hi)?;
    if (flo <= 0.0) == (fhi <= 0.0) {
        return Err(EvalError::Domain("no sign change on the pole bracket"));
    }
    let mut flo = flo;
    while hi - lo > 1e-12 {
        let mid = 0.5 * (lo + hi);
        let fmid = e_of(mid)?;
        if (flo <= 0.0) == (fmid <= 0.0) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}
