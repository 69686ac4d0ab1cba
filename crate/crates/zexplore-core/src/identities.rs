//! The identity registry: every functional-equation, component, polar,
//! derivative and asymptotic relation, evaluated pointwise with a
//! pass/fail/skip verdict.
//!
//! Each identity is identified by a stable string id.  Plane identities
//! evaluate anywhere off the poles of their ingredients; critical-line
//! identities are pinned to `sigma = 1/2` regardless of the requested
//! point.  Tangent-style relations are evaluated through guarded ratios
//! and report `Skipped` where a denominator degenerates, as do asymptotic
//! relations below their validity ordinate.

use alloc::string::String;
use alloc::vec::Vec;

use crate::complexfn::{self, TWO_PI};
use crate::quad;
use crate::symbols::{build_bundle, build_symbols, SymbolSet, ZetaBundle};
use crate::{ComplexPoint, ComplexValue, EvalConfig, EvalError};

const PI: f64 = core::f64::consts::PI;

/// Default relative tolerance for a pass verdict.
pub const REL_TOL_DEFAULT: f64 = 1e-7;

/// Relative guard under which a ratio-form identity is skipped as singular.
const SING_GUARD: f64 = 1e-8;

/// Verdict for one identity at one point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalStatus {
    Passed,
    Failed,
    /// A denominator or normalization degenerated at this point, or the
    /// point lies outside the identity's validity domain.
    SkippedSingular,
}

impl EvalStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            EvalStatus::Passed => "passed",
            EvalStatus::Failed => "failed",
            EvalStatus::SkippedSingular => "skipped",
        }
    }
}

/// One identity evaluated at one point.
#[derive(Debug, Clone)]
pub struct IdentityEval {
    pub id: &'static str,
    /// The abscissa actually used (forced to `1/2` for critical-line ids).
    pub sigma: f64,
    pub rho: f64,
    pub lhs: ComplexValue,
    pub rhs: ComplexValue,
    pub abs_residual: f64,
    pub rel_residual: f64,
    pub status: EvalStatus,
}

/// Registry metadata for one identity.
#[derive(Debug, Clone, Copy)]
pub struct IdentityInfo {
    pub id: &'static str,
    /// Evaluated at `sigma = 1/2` regardless of the requested point.
    pub critical_line_only: bool,
    /// Points below this ordinate are reported as skipped (asymptotic or
    /// interval-based identities).
    pub min_rho: f64,
}

const fn plane(id: &'static str) -> IdentityInfo {
    IdentityInfo { id, critical_line_only: false, min_rho: 0.0 }
}

const fn cl(id: &'static str) -> IdentityInfo {
    IdentityInfo { id, critical_line_only: true, min_rho: 0.0 }
}

/// The full registry, plane identities first.
pub const REGISTRY: [IdentityInfo; 68] = [
    plane("FE-COMP"),
    plane("FE-INV"),
    plane("ARG-FE"),
    plane("MAG-RATIO"),
    plane("VARIANT"),
    plane("XLINE-R"),
    plane("XLINE-I"),
    plane("DINV-R"),
    plane("DINV-I"),
    plane("DFWD-R"),
    plane("DFWD-I"),
    plane("DMAG"),
    plane("ARG-POLAR"),
    plane("TANB"),
    plane("TANB-INV"),
    plane("RLOG-TILDE"),
    plane("RLOG"),
    plane("ARGSUM-PROD"),
    plane("ARGSUM-SYM"),
    plane("GAMMA-IDENT"),
    plane("INTPSI"),
    plane("LGAMMA-REFL"),
    plane("COS-THETA"),
    plane("PSI-IM"),
    plane("PSI-RE"),
    plane("FE-RAW-R"),
    plane("FE-RAW-I"),
    plane("G-POLAR"),
    plane("PHI-DIFF"),
    cl("CL-TANA"),
    cl("CL-LIN-R"),
    cl("CL-LIN-I"),
    cl("DET0"),
    cl("B-ID"),
    cl("A-ID"),
    cl("SIN2A"),
    cl("COS2A"),
    cl("TAN-ID"),
    cl("INV-THETA"),
    IdentityInfo { id: "THETA-ASY", critical_line_only: true, min_rho: 8.0 },
    cl("ZMAIN"),
    cl("ALPHA-PRIME"),
    cl("ZMAIN-INT"),
    cl("COMP-SQ"),
    cl("MAG-SQ"),
    cl("ZZP"),
    IdentityInfo { id: "COS-NEG", critical_line_only: true, min_rho: 7.0 },
    cl("EQ9"),
    cl("DIFF-ID"),
    cl("ZPRIME"),
    cl("LOGZ"),
    cl("ZPZP"),
    cl("LOGZA"),
    IdentityInfo { id: "EXPREP", critical_line_only: true, min_rho: 3.0 },
    cl("DBETA"),
    cl("DBDA"),
    cl("L1NEG"),
    cl("SING-INV"),
    cl("PERT-R"),
    cl("PERT-I"),
    cl("Z2-RATIO-1"),
    cl("Z2-RATIO-2"),
    cl("CFORM-1"),
    cl("CFORM-2"),
    cl("CFORM-3"),
    cl("CFORM-4"),
    cl("INTERIM"),
    cl("H-CL"),
];

/// Look up registry metadata by id.
pub fn identity_info(id: &str) -> Option<&'static IdentityInfo> {
    REGISTRY.iter().find(|info| info.id == id)
}

/// The standard evaluation grid: a fixed set of abscissas crossed with a
/// fixed set of ordinates, avoiding zeros and poles.
pub const GRID_SIGMAS: [f64; 7] = [0.1, 0.25, 0.4, 0.5, 0.6, 0.75, 0.9];
pub const GRID_RHOS: [f64; 7] = [2.0, 5.0, 8.0, 14.2, 21.0, 33.0, 47.0];

pub fn standard_grid() -> Vec<ComplexPoint> {
    let mut pts = Vec::with_capacity(GRID_SIGMAS.len() * GRID_RHOS.len());
    for &sg in &GRID_SIGMAS {
        for &rh in &GRID_RHOS {
            pts.push(ComplexPoint::new(sg, rh));
        }
    }
    pts
}

fn rel_of(lhs: ComplexValue, rhs: ComplexValue) -> f64 {
    let scale = complexfn::modulus(lhs)
        .max(complexfn::modulus(rhs))
        .max(1e-300);
    complexfn::modulus(lhs - rhs) / scale
}

fn re(x: f64) -> ComplexValue {
    ComplexValue::new(x, 0.0)
}

/// Centered finite difference with one Richardson extrapolation step.
fn fd_richardson<F>(f: &mut F, x: f64, h: f64) -> Result<f64, EvalError>
where
    F: FnMut(f64) -> Result<f64, EvalError>,
{
    let d1 = (f(x + h)? - f(x - h)?) / (2.0 * h);
    let d2 = (f(x + h / 2.0)? - f(x - h / 2.0)?) / h;
    Ok((4.0 * d2 - d1) / 3.0)
}

/// Pointwise critical-line building blocks formed from the component bundle:
/// moduli, doubled-angle sines/cosines, angle-difference projections, and the
/// `rho`-derivatives of moduli and angles (`d/drho = i d/ds`).
///
/// Only meaningful for a bundle evaluated at `sigma = 1/2`.
#[derive(Debug, Clone, Copy)]
pub struct ClBlocks {
    pub f: f64,
    pub fp: f64,
    pub az: f64,
    pub ad: f64,
    pub ad2: f64,
    pub sin2a: f64,
    pub cos2a: f64,
    pub cos_ab: f64,
    pub sin_ab: f64,
    pub sin_ag: f64,
    /// `d|zeta|/drho`.
    pub mzp: f64,
    /// `d|zeta'|/drho`.
    pub madp: f64,
    /// `d alpha/drho`.
    pub alphap: f64,
    /// `d beta/drho`.
    pub betap: f64,
}

/// Assemble the critical-line blocks at ordinate `rho` from its bundle.
pub fn cl_blocks(rho: f64, b: &ZetaBundle, cfg: &EvalConfig) -> Result<ClBlocks, EvalError> {
    let f = complexfn::f_rho(rho, cfg)?;
    let fp = complexfn::f_rho_d1(rho, cfg)?;
    let az = complexfn::modulus(b.z());
    let ad = complexfn::modulus(b.z1());
    let ad2 = complexfn::modulus(b.z2());
    Ok(ClBlocks {
        f,
        fp,
        az,
        ad,
        ad2,
        sin2a: 2.0 * b.zr * b.zi / (az * az),
        cos2a: (b.zr * b.zr - b.zi * b.zi) / (az * az),
        cos_ab: (b.zr * b.z1r + b.zi * b.z1i) / (az * ad),
        sin_ab: (b.zi * b.z1r - b.zr * b.z1i) / (az * ad),
        sin_ag: (b.zi * b.z2r - b.zr * b.z2i) / (az * ad2),
        mzp: (b.zi * b.z1r - b.zr * b.z1i) / az,
        madp: (b.z1i * b.z2r - b.z1r * b.z2i) / ad,
        alphap: (b.z1r * b.zr + b.z1i * b.zi) / (az * az),
        betap: (b.z2r * b.z1r + b.z2i * b.z1i) / (ad * ad),
    })
}

/// `cos(alpha - beta)` at `1/2 + i rho` (pointwise direction vectors).
pub fn cos_alpha_beta(rho: f64, cfg: &EvalConfig) -> Result<f64, EvalError> {
    let b = build_bundle(ComplexPoint::new(0.5, rho), cfg)?;
    let q = cl_blocks(rho, &b, cfg)?;
    Ok(q.cos_ab)
}

/// The squared magnitude ratio `Phi` without the full symbol set.
pub fn phi_at(sigma: f64, rho: f64) -> Result<f64, EvalError> {
    let g = complexfn::gamma(ComplexPoint::new(sigma, rho))?;
    let c0 = (libm::cos(PI * sigma) + libm::cosh(PI * rho)) / 2.0;
    let ga = complexfn::modulus(g);
    Ok(libm::pow(TWO_PI, 2.0 * sigma) / (4.0 * c0 * ga * ga))
}

/// Closed form of `d Phi / d sigma`.
pub fn phi_sigma_derivative(s: ComplexPoint) -> Result<f64, EvalError> {
    let sym = crate::symbols::build_symbols(
        s,
        &EvalConfig::default(),
    )?;
    let cc = libm::cos(PI * s.sigma) + libm::cosh(PI * s.rho);
    Ok(libm::pow(TWO_PI, 2.0 * s.sigma) * (PI * libm::sin(PI * s.sigma) - sym.psi2 * cc)
        / (2.0 * cc * cc * sym.gamma_abs * sym.gamma_abs))
}

/// Exponential representation of a magnitude ratio over `[rho_lo, rho_hi]`.
#[derive(Debug, Clone, Copy)]
pub struct ExpRepResult {
    pub integral: f64,
    pub magnitude_ratio: f64,
    pub exponential: f64,
}

/// Integrate `tan(alpha - beta) / f` over the interval and compare
/// `|zeta(1/2 + i rho_hi)| / |zeta(1/2 + i rho_lo)|` with the exponential of
/// the integral.  Aborts with a pole error if the integrand degenerates
/// (`|cos(alpha - beta)| < 1e-6`, i.e. a zero ordinate inside the interval).
pub fn exp_representation(
    rho_lo: f64,
    rho_hi: f64,
    cfg: &EvalConfig,
) -> Result<ExpRepResult, EvalError> {
    let mut integrand = |r: f64| -> Result<f64, EvalError> {
        let b = build_bundle(ComplexPoint::new(0.5, r), cfg)?;
        let q = cl_blocks(r, &b, cfg)?;
        if q.cos_ab.abs() < 1e-6 {
            return Err(EvalError::Pole { re: 0.5, im: r });
        }
        Ok((q.sin_ab / q.cos_ab) / q.f)
    };
    let integral = quad::integrate(&mut integrand, rho_lo, rho_hi, 1e-9)?;
    let z_hi = complexfn::zeta(ComplexPoint::new(0.5, rho_hi), cfg)?;
    let z_lo = complexfn::zeta(ComplexPoint::new(0.5, rho_lo), cfg)?;
    Ok(ExpRepResult {
        integral,
        magnitude_ratio: complexfn::modulus(z_hi) / complexfn::modulus(z_lo),
        exponential: libm::exp(integral),
    })
}

/// Internal outcome of one identity computation.
enum Raw {
    /// Compare two values; `rel` overrides the default relative residual
    /// (used where an identity folds several component comparisons into one
    /// verdict).
    Val {
        lhs: ComplexValue,
        rhs: ComplexValue,
        rel: Option<f64>,
    },
    /// A genuinely singular point for this identity.
    Skip,
}

fn val(lhs: ComplexValue, rhs: ComplexValue) -> Raw {
    Raw::Val { lhs, rhs, rel: None }
}

/// A residual that is already dimensionless: report it against zero.
fn resid(r: f64) -> Raw {
    Raw::Val { lhs: re(r), rhs: re(0.0), rel: Some(r.abs()) }
}

struct Ctx {
    sym: SymbolSet,
    b: ZetaBundle,
}

fn build_ctx(s: ComplexPoint, cfg: &EvalConfig) -> Result<Ctx, EvalError> {
    Ok(Ctx {
        sym: build_symbols(s, cfg)?,
        b: build_bundle(s, cfg)?,
    })
}

/// Evaluate identity `id` at `s` against the default tolerance.
pub fn evaluate(id: &str, s: ComplexPoint, cfg: &EvalConfig) -> Result<IdentityEval, EvalError> {
    evaluate_with_tol(id, s, cfg, REL_TOL_DEFAULT)
}

/// Evaluate identity `id` at `s` against an explicit relative tolerance.
pub fn evaluate_with_tol(
    id: &str,
    s: ComplexPoint,
    cfg: &EvalConfig,
    rel_tol: f64,
) -> Result<IdentityEval, EvalError> {
    let info = identity_info(id).ok_or(EvalError::Domain("unknown identity id"))?;
    let point = if info.critical_line_only {
        ComplexPoint::new(0.5, s.rho)
    } else {
        s
    };
    if point.rho < info.min_rho {
        return Ok(IdentityEval {
            id: info.id,
            sigma: point.sigma,
            rho: point.rho,
            lhs: re(f64::NAN),
            rhs: re(f64::NAN),
            abs_residual: f64::NAN,
            rel_residual: f64::NAN,
            status: EvalStatus::SkippedSingular,
        });
    }
    let raw = compute(info.id, point, cfg)?;
    let (lhs, rhs, rel) = match raw {
        Raw::Skip => {
            return Ok(IdentityEval {
                id: info.id,
                sigma: point.sigma,
                rho: point.rho,
                lhs: re(f64::NAN),
                rhs: re(f64::NAN),
                abs_residual: f64::NAN,
                rel_residual: f64::NAN,
                status: EvalStatus::SkippedSingular,
            });
        }
        Raw::Val { lhs, rhs, rel } => (lhs, rhs, rel),
    };
    let abs_residual = complexfn::modulus(lhs - rhs);
    let rel_residual = rel.unwrap_or_else(|| rel_of(lhs, rhs));
    let status = if !rel_residual.is_finite() {
        EvalStatus::SkippedSingular
    } else if rel_residual <= rel_tol {
        EvalStatus::Passed
    } else {
        EvalStatus::Failed
    };
    Ok(IdentityEval {
        id: info.id,
        sigma: point.sigma,
        rho: point.rho,
        lhs,
        rhs,
        abs_residual,
        rel_residual,
        status,
    })
}

/// Evaluate every registry identity over the given points.  Critical-line
/// identities are evaluated once per distinct ordinate.  Rows appear in
/// registry order, then point order.
pub fn sweep(
    points: &[ComplexPoint],
    cfg: &EvalConfig,
    rel_tol: f64,
) -> Result<Vec<IdentityEval>, EvalError> {
    let mut rhos: Vec<f64> = points.iter().map(|p| p.rho).collect();
    rhos.sort_by(|a, b| a.partial_cmp(b).expect("finite ordinates"));
    rhos.dedup();

    let mut out = Vec::new();
    for info in REGISTRY.iter() {
        if info.critical_line_only {
            for &rh in &rhos {
                out.push(evaluate_with_tol(info.id, ComplexPoint::new(0.5, rh), cfg, rel_tol)?);
            }
        } else {
            for &p in points {
                out.push(evaluate_with_tol(info.id, p, cfg, rel_tol)?);
            }
        }
    }
    Ok(out)
}

/// Render one evaluation as a CSV row (stable 15-significant-digit format).
pub fn csv_row(e: &IdentityEval) -> String {
    use core::fmt::Write;
    let mut s = String::new();
    let _ = write!(
        s,
        "{},{:.14e},{:.14e},{:.14e},{:.14e},{:.14e},{:.14e},{:.14e},{:.14e},{}",
        e.id,
        e.sigma,
        e.rho,
        e.lhs.re,
        e.lhs.im,
        e.rhs.re,
        e.rhs.im,
        e.abs_residual,
        e.rel_residual,
        e.status.as_str()
    );
    s
}

pub const CSV_HEADER: &str = "id,sigma,rho,lhs_re,lhs_im,rhs_re,rhs_im,abs_res,rel_res,status";

// ---------------------------------------------------------------------------
// identity bodies
// ---------------------------------------------------------------------------

#[allow(clippy::too_many_lines)]
fn compute(id: &'static str, s: ComplexPoint, cfg: &EvalConfig) -> Result<Raw, EvalError> {
    // Interval/derivative identities that do not need the symbol context.
    match id {
        "PHI-DIFF" => {
            let rho = s.rho;
            let mut phi_fn = |sg: f64| phi_at(sg, rho);
            let lhs = fd_richardson(&mut phi_fn, s.sigma, 1e-4)?;
            let rhs = phi_sigma_derivative(s)?;
            return Ok(val(re(lhs), re(rhs)));
        }
        "INTPSI" => {
            let sigma = s.sigma;
            let mut integrand =
                |t: f64| Ok(complexfn::digamma(ComplexPoint::new(sigma, t))?.re);
            let lhs = quad::integrate(&mut integrand, 0.0, s.rho, 1e-10)?;
            let rhs = complexfn::log_gamma(s)?.im;
            return Ok(val(re(lhs), re(rhs)));
        }
        "EXPREP" => {
            // A zero ordinate inside the interval makes the integrand
            // singular: it either trips the pole guard or exhausts the
            // quadrature's subdivision depth.  Both mean this interval is
            // not comparable, not that the identity failed.
            return match exp_representation(s.rho - 1.0, s.rho, cfg) {
                Ok(r) => Ok(val(re(r.magnitude_ratio), re(r.exponential))),
                Err(EvalError::Pole { .. }) | Err(EvalError::Accuracy { .. }) => Ok(Raw::Skip),
                Err(e) => Err(e),
            };
        }
        "DIFF-ID" => {
            let mut mag2 = |r: f64| {
                Ok(complexfn::zeta(ComplexPoint::new(0.5, r), cfg)?.norm_sqr())
            };
            let d = fd_richardson(&mut mag2, s.rho, 1e-4)?;
            let b = build_bundle(s, cfg)?;
            let q = cl_blocks(s.rho, &b, cfg)?;
            let lhs = d * d / 4.0;
            let rhs = q.az * q.az * q.mzp * q.mzp;
            return Ok(val(re(lhs), re(rhs)));
        }
        _ => {}
    }

    let ctx = build_ctx(s, cfg)?;
    let sym = &ctx.sym;
    let b = &ctx.b;

    let raw = match id {
        // ------------------------------------------------------------------
        // plane identities
        // ------------------------------------------------------------------
        "FE-COMP" => {
            let two_ps = 2.0 * sym.pi_sigma;
            val(
                b.tz(),
                ComplexValue::new(sym.zeta_p / two_ps, -sym.zeta_m / two_ps),
            )
        }
        "FE-INV" => {
            let den = sym.gamma_abs * sym.gamma_abs * sym.c0;
            let rr = sym.pi_sigma * (b.tzi * sym.g1 + b.tzr * sym.g2) / (8.0 * den);
            let ii = -sym.pi_sigma * (b.tzi * sym.g2 - b.tzr * sym.g1) / (8.0 * den);
            val(b.z(), ComplexValue::new(rr, ii))
        }
        "ARG-FE" => {
            let az = complexfn::modulus(b.z());
            let atz = complexfn::modulus(b.tz());
            let (sa, ca) = (b.zi / az, b.zr / az);
            let (sat, cat) = (b.tzi / atz, b.tzr / atz);
            let gn = libm::hypot(sym.g1, sym.g2);
            resid(sat * (sa * sym.g1 + ca * sym.g2) / gn + cat * (sa * sym.g2 - ca * sym.g1) / gn)
        }
        "MAG-RATIO" => val(
            re(b.z().norm_sqr() / b.tz().norm_sqr()),
            re(sym.phi),
        ),
        "VARIANT" => {
            let zp_1ms = b.tz1().conj();
            let z_1ms = b.tz().conj();
            val(zp_1ms / b.z1() + sym.chi, sym.f_s * z_1ms / b.z1())
        }
        "XLINE-R" => {
            let sg = sym.p1 * sym.p1 + sym.p2 * sym.p2;
            let rhs = -(4.0 * sym.c0 / sg)
                * ((sym.h2 * b.z1i + sym.h1 * b.z1r) / sym.pi_sigma
                    - 2.0 * (b.tz1i * sym.p1 - b.tz1r * sym.p2));
            val(re(b.tzr), re(rhs))
        }
        "XLINE-I" => {
            let sg = sym.p1 * sym.p1 + sym.p2 * sym.p2;
            let rhs = (4.0 * sym.c0 / sg)
                * ((sym.h1 * b.z1i - sym.h2 * b.z1r) / sym.pi_sigma
                    - 2.0 * (b.tz1i * sym.p2 + b.tz1r * sym.p1));
            val(re(b.tzi), re(rhs))
        }
        "DINV-R" => {
            let k = sym.pi_sigma / (64.0 * sym.gamma_abs * sym.gamma_abs * sym.c0 * sym.c0);
            let rhs = -k
                * (8.0 * sym.c0 * (b.tz1i * sym.g1 + b.tz1r * sym.g2)
                    + sym.h2 * b.tzi
                    + sym.h1 * b.tzr);
            val(re(b.z1r), re(rhs))
        }
        "DINV-I" => {
            let k = sym.pi_sigma / (64.0 * sym.gamma_abs * sym.gamma_abs * sym.c0 * sym.c0);
            let rhs = k
                * (8.0 * sym.c0 * (b.tz1i * sym.g2 - b.tz1r * sym.g1) - sym.h2 * b.tzr
                    + sym.h1 * b.tzi);
            val(re(b.z1i), re(rhs))
        }
        "DFWD-R" => {
            let rhs = -(sym.g1 * b.z1i + b.z1r * sym.g2) / (2.0 * sym.pi_sigma)
                + (sym.h3 * b.zi - sym.h4 * b.zr) / (16.0 * sym.pi_sigma * sym.c0);
            val(re(b.tz1r), re(rhs))
        }
        "DFWD-I" => {
            let rhs = (sym.g2 * b.z1i - sym.g1 * b.z1r) / (2.0 * sym.pi_sigma)
                + (sym.h4 * b.zi + sym.h3 * b.zr) / (16.0 * sym.pi_sigma * sym.c0);
            val(re(b.tz1i), re(rhs))
        }
        "DMAG" => {
            if sym.g1.abs() < SING_GUARD * libm::hypot(sym.g1, sym.g2) {
                return Ok(Raw::Skip);
            }
            let rhs = (sym.pi_sigma / sym.g1)
                * ((b.z1i * b.tzr + b.z1r * b.tzi) * sym.q1
                    + (-b.z1i * b.tzi + b.z1r * b.tzr) * sym.q2
                    - 2.0 * b.z1i * b.tz1r
                    - 2.0 * b.z1r * b.tz1i);
            val(re(b.z1().norm_sqr()), re(rhs))
        }
        "ARG-POLAR" => {
            let az = complexfn::modulus(b.z());
            let atz = complexfn::modulus(b.tz());
            let (sa, ca) = (b.zi / az, b.zr / az);
            let (sat, cat) = (b.tzi / atz, b.tzr / atz);
            let u = libm::exp(-PI * sym.rho);
            let x1 = PI * sym.sigma / 2.0 + sym.rho_theta;
            let x2 = -PI * sym.sigma / 2.0 + sym.rho_theta;
            let num = u * (libm::sin(x2) * ca - libm::cos(x2) * sa)
                + (libm::sin(x1) * ca - libm::cos(x1) * sa);
            let den = (libm::cos(x1) * ca + libm::sin(x1) * sa)
                + u * (libm::cos(x2) * ca + libm::sin(x2) * sa);
            let n = libm::hypot(num, den);
            if n < SING_GUARD {
                return Ok(Raw::Skip);
            }
            resid((sat * den - cat * num) / n)
        }
        "TANB" => {
            let ad = complexfn::modulus(b.z1());
            let atd = complexfn::modulus(b.tz1());
            let atz = complexfn::modulus(b.tz());
            if b.z1r.abs() < SING_GUARD * ad
                || b.tz1r.abs() < SING_GUARD * atd
                || b.tzr.abs() < SING_GUARD * atz
            {
                return Ok(Raw::Skip);
            }
            let tb = b.z1i / b.z1r;
            let tbt = b.tz1i / b.tz1r;
            let tat = b.tzi / b.tzr;
            let zr_t = b.tz1r / b.tzr;
            let num = 8.0 * zr_t * sym.c0 * (tbt * sym.g2 - sym.g1) + sym.h1 * tat - sym.h2;
            let den = 8.0 * zr_t * sym.c0 * (tbt * sym.g1 + sym.g2) + sym.h2 * tat + sym.h1;
            if den.abs() < SING_GUARD * libm::hypot(num, den) {
                return Ok(Raw::Skip);
            }
            val(re(tb), re(-num / den))
        }
        "TANB-INV" => {
            let ad = complexfn::modulus(b.z1());
            let atd = complexfn::modulus(b.tz1());
            let az = complexfn::modulus(b.z());
            if b.z1r.abs() < SING_GUARD * ad
                || b.tz1r.abs() < SING_GUARD * atd
                || b.zr.abs() < SING_GUARD * az
            {
                return Ok(Raw::Skip);
            }
            let tb = b.z1i / b.z1r;
            let tbt = b.tz1i / b.tz1r;
            let ta = b.zi / b.zr;
            let zr_r = b.z1r / b.zr;
            let num = 8.0 * sym.c0 * zr_r * (tb * sym.g2 - sym.g1) + ta * sym.h4 + sym.h3;
            let den = 8.0 * sym.c0 * zr_r * (tb * sym.g1 + sym.g2) - ta * sym.h3 + sym.h4;
            if den.abs() < SING_GUARD * libm::hypot(num, den) {
                return Ok(Raw::Skip);
            }
            val(re(tbt), re(-num / den))
        }
        "RLOG-TILDE" => {
            let atz = complexfn::modulus(b.tz());
            let ad = complexfn::modulus(b.z1());
            let atd = complexfn::modulus(b.tz1());
            if b.tzr.abs() < SING_GUARD * atz
                || b.z1r.abs() < SING_GUARD * ad
                || b.tz1r.abs() < SING_GUARD * atd
            {
                return Ok(Raw::Skip);
            }
            let tat = b.tzi / b.tzr;
            let tb = b.z1i / b.z1r;
            let tbt = b.tz1i / b.tz1r;
            let num = (-tat - tb) * sym.h1 + (-tat * tb + 1.0) * sym.h2;
            let den = 8.0 * sym.c0 * ((tbt * tb - 1.0) * sym.g1 + (tbt + tb) * sym.g2);
            if den.abs() < SING_GUARD * num.abs().max(1.0) {
                return Ok(Raw::Skip);
            }
            val(re(b.tz1r / b.tzr), re(num / den))
        }
        "RLOG" => {
            let az = complexfn::modulus(b.z());
            let ad = complexfn::modulus(b.z1());
            let atd = complexfn::modulus(b.tz1());
            if b.zr.abs() < SING_GUARD * az
                || b.z1r.abs() < SING_GUARD * ad
                || b.tz1r.abs() < SING_GUARD * atd
            {
                return Ok(Raw::Skip);
            }
            let ta = b.zi / b.zr;
            let tb = b.z1i / b.z1r;
            let tbt = b.tz1i / b.tz1r;
            let num = (ta * sym.h3 - sym.h4) * tbt - ta * sym.h4 - sym.h3;
            let den = 8.0 * sym.c0 * ((tbt * sym.g1 + sym.g2) * tb + sym.g2 * tbt - sym.g1);
            if den.abs() < SING_GUARD * num.abs().max(1.0) {
                return Ok(Raw::Skip);
            }
            val(re(b.z1r / b.zr), re(num / den))
        }
        "ARGSUM-PROD" => {
            let lhs = b.z1i * b.zi + b.z1r * b.zr;
            let rhs = -(b.tz1i * b.tzi + b.tz1r * b.tzr) * sym.phi
                - sym.p2 * b.z().norm_sqr() / (8.0 * sym.c0);
            val(re(lhs), re(rhs))
        }
        "ARGSUM-SYM" => {
            let lhs = (b.tz1i * b.tzi + b.tz1r * b.tzr) / b.tz().norm_sqr()
                + (b.z1i * b.zi + b.z1r * b.zr) / b.z().norm_sqr();
            let rhs =
                -(2.0 * sym.psi2 * sym.c0 - PI * libm::sin(PI * sym.sigma)) / (4.0 * sym.c0);
            val(re(lhs), re(rhs))
        }
        "GAMMA-IDENT" => {
            let half = PI * sym.sigma / 2.0;
            let hh = PI * sym.rho / 2.0;
            let t1 = sym.theta_cont
                - libm::atan(libm::tan(half) * libm::tanh(hh))
                - sym.rho_pi;
            let gn = libm::hypot(sym.g1, sym.g2);
            let r1 = libm::sin(t1) * sym.g2 / gn + libm::cos(t1) * sym.g1 / gn;
            let mn = libm::sin(half) * libm::cos(sym.rho_theta) * libm::sinh(hh)
                + libm::cos(half) * libm::sin(sym.rho_theta) * libm::cosh(hh);
            let md = libm::sin(half) * libm::sin(sym.rho_theta) * libm::sinh(hh)
                - libm::cos(half) * libm::cos(sym.rho_theta) * libm::cosh(hh);
            let r2 = (mn * sym.g2 + md * sym.g1) / (libm::hypot(mn, md) * gn);
            let kval = (t1 - libm::atan(mn / md)) / PI;
            let r3 = (kval - libm::round(kval)).abs();
            resid(r1.abs().max(r2.abs()).max(r3))
        }
        "LGAMMA-REFL" => {
            let theta_tilde = complexfn::log_gamma(ComplexPoint::new(sym.sigma, sym.rho).reflect())?.im;
            let d = sym.theta_cont - theta_tilde;
            resid(
                libm::sin(d) * libm::sin(PI * sym.sigma)
                    + libm::cos(d) * libm::tanh(PI * sym.rho) * libm::cos(PI * sym.sigma),
            )
        }
        "COS-THETA" => {
            let cs = libm::cos(PI * sym.sigma);
            if cs.abs() < SING_GUARD {
                return Ok(Raw::Skip);
            }
            let theta_tilde = complexfn::log_gamma(ComplexPoint::new(sym.sigma, sym.rho).reflect())?.im;
            let d = sym.theta_cont - theta_tilde;
            let t = libm::tan(PI * sym.sigma);
            let th = libm::tanh(PI * sym.rho);
            let rhs = libm::sin(PI * sym.sigma) / (cs.abs() * libm::sqrt(t * t + th * th));
            val(re(libm::cos(d)), re(rhs))
        }
        "PSI-IM" => {
            let p = ComplexPoint::new(sym.sigma, sym.rho);
            let lhs = complexfn::digamma(p)?.im + complexfn::digamma(p.reflect())?.im;
            let rhs = PI * libm::sinh(2.0 * PI * sym.rho)
                / (libm::cosh(2.0 * PI * sym.rho) - libm::cos(2.0 * PI * sym.sigma));
            val(re(lhs), re(rhs))
        }
        "PSI-RE" => {
            let p = ComplexPoint::new(sym.sigma, sym.rho);
            let lhs = complexfn::digamma(p)?.re
                + PI * libm::sin(2.0 * PI * sym.sigma)
                    / (libm::cosh(2.0 * PI * sym.rho) - libm::cos(2.0 * PI * sym.sigma));
            let rhs = complexfn::digamma(p.reflect())?.re;
            val(re(lhs), re(rhs))
        }
        "FE-RAW-R" => {
            let d_norm = b.z1().norm_sqr();
            let num = ((-4.0 * sym.psi1 * b.z1r + 2.0 * b.z1i * sym.psi2) * sym.zeta_m
                + 8.0 * (-b.z1i * b.tz1i + b.z1r * b.tz1r) * sym.pi_sigma
                + 4.0 * sym.g2 * d_norm)
                * sym.c0
                + (libm::sinh(PI * sym.rho) * b.z1r - libm::sin(PI * sym.sigma) * b.z1i)
                    * PI
                    * sym.zeta_m;
            val(re(b.tzr), re(num / sym.zeta_d))
        }
        "FE-RAW-I" => {
            let d_norm = b.z1().norm_sqr();
            let num = ((4.0 * sym.psi1 * b.z1r - 2.0 * b.z1i * sym.psi2) * sym.zeta_p
                - 8.0 * (b.z1i * b.tz1r + b.z1r * b.tz1i) * sym.pi_sigma
                - 4.0 * sym.g1 * d_norm)
                * sym.c0
                - (libm::sinh(PI * sym.rho) * b.z1r - libm::sin(PI * sym.sigma) * b.z1i)
                    * PI
                    * sym.zeta_p;
            val(re(b.tzi), re(-num / sym.zeta_d))
        }
        "G-POLAR" => {
            let half = PI * sym.sigma / 2.0;
            let hh = PI * sym.rho / 2.0;
            let rt = sym.rho_theta;
            let ga = sym.gamma_abs;
            let g1a = 4.0 * ga
                * (libm::sin(half) * libm::cos(rt) * libm::sinh(hh)
                    + libm::cos(half) * libm::sin(rt) * libm::cosh(hh));
            let g1b = 2.0 * ga
                * (libm::sin(half + rt) * libm::exp(hh) - libm::sin(half - rt) * libm::exp(-hh));
            let g2a = 4.0 * ga
                * (-libm::sin(half) * libm::sin(rt) * libm::sinh(hh)
                    + libm::cos(half) * libm::cos(rt) * libm::cosh(hh));
            let g2b = 2.0 * ga
                * (libm::cos(half + rt) * libm::exp(hh) + libm::cos(half - rt) * libm::exp(-hh));
            let worst = rel_of(re(sym.g1), re(g1a))
                .max(rel_of(re(sym.g1), re(g1b)))
                .max(rel_of(re(sym.g2), re(g2a)))
                .max(rel_of(re(sym.g2), re(g2b)));
            Raw::Val {
                lhs: ComplexValue::new(sym.g1, sym.g2),
                rhs: ComplexValue::new(g1a, g2a),
                rel: Some(worst),
            }
        }

        // ------------------------------------------------------------------
        // critical-line identities (s already pinned to sigma = 1/2)
        // ------------------------------------------------------------------
        _ => {
            let q = cl_blocks(s.rho, b, cfg)?;
            cl_compute(id, sym, b, &q)?
        }
    };
    Ok(raw)
}

#[allow(clippy::too_many_lines)]
fn cl_compute(
    id: &'static str,
    sym: &SymbolSet,
    b: &ZetaBundle,
    q: &ClBlocks,
) -> Result<Raw, EvalError> {
    let rt = sym.rho_theta;
    let rho = sym.rho;
    let raw = match id {
        "CL-TANA" => {
            let (sa, ca) = (b.zi / q.az, b.zr / q.az);
            let u = libm::exp(-PI * rho);
            let x = PI / 4.0 + rt;
            let root = libm::sqrt(1.0 + u * u);
            let n2 = libm::sin(x) - u * libm::cos(x);
            let d2 = libm::cos(x) + root + u * libm::sin(x);
            let r1 = (sa * d2 - ca * n2) / libm::hypot(n2, d2);
            let n1 = -(libm::cos(x) - root + u * libm::sin(x));
            let d1 = libm::sin(x) - u * libm::cos(x);
            let r2 = (sa * d1 - ca * n1) / libm::hypot(n1, d1);
            resid(r1.abs().max(r2.abs()))
        }
        "CL-LIN-R" => val(
            re(b.zr / q.f),
            re((sym.b + 0.5) * b.z1r + sym.a * b.z1i),
        ),
        "CL-LIN-I" => val(
            re(b.zi / q.f),
            re(sym.a * b.z1r - (sym.b - 0.5) * b.z1i),
        ),
        "DET0" => val(re(sym.a * sym.a + sym.b * sym.b), re(0.25)),
        "B-ID" => val(re(sym.b), re(q.cos2a / 2.0)),
        "A-ID" => val(re(sym.a), re(q.sin2a / 2.0)),
        "SIN2A" => {
            let hh = PI * rho / 2.0;
            let rhs = (libm::cos(rt) * libm::sinh(hh) + libm::sin(rt) * libm::cosh(hh))
                / libm::sqrt(libm::cosh(PI * rho));
            val(re(q.sin2a), re(rhs))
        }
        "COS2A" => {
            let hh = PI * rho / 2.0;
            let rhs = (libm::cosh(hh) * libm::cos(rt) - libm::sinh(hh) * libm::sin(rt))
                / libm::sqrt(libm::cosh(PI * rho));
            val(re(q.cos2a), re(rhs))
        }
        "TAN-ID" => {
            if b.zr.abs() < SING_GUARD * q.az || q.sin2a.abs() < SING_GUARD {
                return Ok(Raw::Skip);
            }
            val(
                re(b.zi / b.zr),
                re(1.0 / q.sin2a - q.cos2a / q.sin2a),
            )
        }
        "INV-THETA" => {
            if q.cos2a.abs() < SING_GUARD {
                return Ok(Raw::Skip);
            }
            let hh = PI * rho / 2.0;
            let rtc = libm::sqrt(libm::cosh(PI * rho));
            let r1 = libm::cos(rt) - (libm::sinh(hh) * q.sin2a + libm::cosh(hh) * q.cos2a) / rtc;
            let r2 = libm::sin(rt) - (libm::cosh(hh) * q.sin2a - libm::sinh(hh) * q.cos2a) / rtc;
            let u = libm::exp(-PI * rho);
            let t2a = q.sin2a / q.cos2a;
            let num = (1.0 + u) * t2a - 1.0 + u;
            let den = (1.0 - u) * t2a + 1.0 + u;
            let r3 = (libm::sin(rt) * den - libm::cos(rt) * num) / libm::hypot(num, den);
            resid(r1.abs().max(r2.abs()).max(r3.abs()))
        }
        "THETA-ASY" => {
            if q.cos2a.abs() < SING_GUARD {
                return Ok(Raw::Skip);
            }
            let t2a = q.sin2a / q.cos2a;
            if (t2a + 1.0).abs() < SING_GUARD * (1.0 + t2a.abs()) {
                return Ok(Raw::Skip);
            }
            val(re(libm::tan(rt)), re((t2a - 1.0) / (t2a + 1.0)))
        }
        "ZMAIN" => val(
            re(b.zr * b.zr + b.zi * b.zi),
            re(q.f * (b.z1i * b.zi + b.z1r * b.zr)),
        ),
        "ALPHA-PRIME" => val(re(q.alphap), re(1.0 / q.f)),
        "ZMAIN-INT" => {
            let cos2 = (1.0 + q.cos2a) / 2.0;
            let rhs = q.f
                * (-(b.z1i * b.z1i - b.z1r * b.z1r) * cos2
                    + b.z1r * b.z1i * q.sin2a
                    + b.z1i * b.z1i);
            val(re(b.zi * b.z1i + b.zr * b.z1r), re(rhs))
        }
        "COMP-SQ" => {
            let cos2 = (1.0 + q.cos2a) / 2.0;
            let sin2 = (1.0 - q.cos2a) / 2.0;
            let lr = b.zr * b.zr / (q.f * q.f);
            let li = b.zi * b.zi / (q.f * q.f);
            let rr = q.ad * q.ad * cos2 * q.cos_ab * q.cos_ab;
            let ri = q.ad * q.ad * sin2 * q.cos_ab * q.cos_ab;
            Raw::Val {
                lhs: ComplexValue::new(lr, li),
                rhs: ComplexValue::new(rr, ri),
                rel: Some(rel_of(re(lr), re(rr)).max(rel_of(re(li), re(ri)))),
            }
        }
        "MAG-SQ" => val(
            re(b.z().norm_sqr() / b.z1().norm_sqr()),
            re(q.f * q.f * q.cos_ab * q.cos_ab),
        ),
        "ZZP" => val(re(q.az / q.ad), re(q.f * q.cos_ab)),
        "COS-NEG" => {
            let over = q.cos_ab.max(0.0);
            Raw::Val {
                lhs: re(q.cos_ab),
                rhs: re(0.0),
                rel: Some(over),
            }
        }
        "EQ9" => {
            let cross = b.z1i * b.zr - b.z1r * b.zi;
            let lhs = q.az * q.az / (q.ad * q.ad * q.f * q.f)
                + cross * cross / (q.ad * q.ad * q.az * q.az);
            val(re(lhs), re(1.0))
        }
        "ZPRIME" => val(
            re(q.mzp * q.mzp),
            re(q.ad * q.ad - q.az * q.az / (q.f * q.f)),
        ),
        "LOGZ" => val(
            re((q.mzp / q.az) * (q.mzp / q.az)),
            re(q.ad * q.ad / (q.az * q.az) - 1.0 / (q.f * q.f)),
        ),
        "ZPZP" => val(re(q.mzp / q.ad), re(q.sin_ab)),
        "LOGZA" => {
            if q.cos_ab.abs() < SING_GUARD {
                return Ok(Raw::Skip);
            }
            val(re(q.mzp / q.az), re((q.sin_ab / q.cos_ab) / q.f))
        }
        "DBETA" => {
            if q.sin_ab.abs() < SING_GUARD || q.cos_ab.abs() < SING_GUARD {
                return Ok(Raw::Skip);
            }
            let tan_ab = q.sin_ab / q.cos_ab;
            let rhs = 2.0 / q.f - q.fp / (q.f * tan_ab) - q.madp / (tan_ab * q.ad);
            val(re(q.betap), re(rhs))
        }
        "DBDA" => {
            if q.mzp.abs() < SING_GUARD * q.az || q.alphap.abs() < SING_GUARD {
                return Ok(Raw::Skip);
            }
            let rhs = 2.0 - (q.madp / q.ad + q.fp / q.f) / (q.mzp / q.az);
            val(re(q.betap / q.alphap), re(rhs))
        }
        "L1NEG" => {
            let (sb, cb) = (b.z1i / q.ad, b.z1r / q.ad);
            let lhs = -1.0 / q.f + (sb * b.z2i + cb * b.z2r) / q.ad;
            val(re(lhs), re(q.betap - q.alphap))
        }
        "SING-INV" => {
            if q.sin2a.abs() < SING_GUARD {
                return Ok(Raw::Skip);
            }
            let rhs = 2.0 * b.zr / (q.sin2a * q.f) - (q.cos2a + 1.0) * b.z1r / q.sin2a;
            val(re(b.z1i), re(rhs))
        }
        "PERT-R" => {
            let sin2 = (1.0 - q.cos2a) / 2.0;
            let rhs = q.fp * b.zi / (2.0 * q.f)
                + b.zr / q.f
                + (2.0 * sin2 * b.z2r - q.sin2a * b.z2i) * q.f / 4.0;
            val(re(b.z1r), re(rhs))
        }
        "PERT-I" => {
            let cos2 = (1.0 + q.cos2a) / 2.0;
            let rhs = -q.fp * b.zr / (2.0 * q.f)
                + b.zi / q.f
                + (2.0 * cos2 * b.z2i - q.sin2a * b.z2r) * q.f / 4.0;
            val(re(b.z1i), re(rhs))
        }
        "Z2-RATIO-1" => {
            if q.sin_ag.abs() < SING_GUARD {
                return Ok(Raw::Skip);
            }
            let rhs = (-q.fp * q.cos_ab + 2.0 * q.sin_ab) / (q.sin_ag * q.f);
            val(re(q.ad2 / q.ad), re(rhs))
        }
        "Z2-RATIO-2" => {
            if q.sin_ag.abs() < SING_GUARD || q.cos_ab.abs() < SING_GUARD {
                return Ok(Raw::Skip);
            }
            let rhs = (-q.fp + 2.0 * q.sin_ab / q.cos_ab) / (q.sin_ag * q.f * q.f);
            val(re(q.ad2 / q.az), re(rhs))
        }
        "CFORM-1" => {
            let e2ia = (b.z() / q.az) * (b.z() / q.az);
            val(
                b.z() * (2.0 / q.f),
                e2ia * b.z1().conj() + b.z1(),
            )
        }
        "CFORM-2" => {
            let eia = b.z() / q.az;
            let r1 = complexfn::modulus(re(q.az) - eia.conj() * b.z()) / q.az;
            let rhs = q.f * (eia * b.z1().conj()).re;
            Raw::Val {
                lhs: re(q.az),
                rhs: re(rhs),
                rel: Some(r1.max(rel_of(re(q.az), re(rhs)))),
            }
        }
        "CFORM-3" => {
            let eia = b.z() / q.az;
            val(b.z() / q.ad, eia * (q.f * q.cos_ab))
        }
        "CFORM-4" => {
            let eiab = (b.z() / q.az) * (b.z1() / q.ad).conj();
            val(b.z() / b.z1(), eiab * (q.f * q.cos_ab))
        }
        "INTERIM" => {
            // The angle enters with the sign theta - rho ln(2 pi).
            let rti = -rt;
            let e_ia = b.z() / q.az;
            let e_ib = b.z1() / q.ad;
            let e_ib2 = e_ib * e_ib;
            let e_ib4 = e_ib2 * e_ib2;
            let e_ib3 = e_ib2 * e_ib;
            let cos4b = e_ib4.re;
            let sin4b = e_ib4.im;
            let cos_ab = (e_ia * e_ib.conj()).re;
            let rot = ComplexValue::new(libm::cos(2.0 * rti), libm::sin(2.0 * rti));
            let phase = rot * e_ib3 * e_ia;
            let (sh, ch) = (libm::sinh(PI * rho), libm::cosh(PI * rho));
            let num = (-sh * libm::sin(2.0 * rti) - libm::cos(2.0 * rti)) * cos4b
                + (-libm::cos(2.0 * rti) * sh + libm::sin(2.0 * rti)) * sin4b
                + ch;
            let den = ch * cos_ab - sh * phase.im - phase.re;
            if den.abs() < SING_GUARD * num.abs().max(1.0) {
                return Ok(Raw::Skip);
            }
            val(re(num / den), re(2.0 * cos_ab))
        }
        "H-CL" => {
            let k = -16.0 * libm::sqrt(TWO_PI) * libm::cosh(PI * rho) / q.f;
            Raw::Val {
                lhs: ComplexValue::new(sym.h1, sym.h2),
                rhs: ComplexValue::new(k * q.cos2a, k * q.sin2a),
                rel: Some(
                    rel_of(re(sym.h1), re(k * q.cos2a))
                        .max(rel_of(re(sym.h2), re(k * q.sin2a))),
                ),
            }
        }
        _ => return Err(EvalError::Domain("unknown identity id")),
    };
    Ok(raw)
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
    fn registry_has_expected_shape() {
        assert_eq!(REGISTRY.len(), 68);
        let plane_count = REGISTRY.iter().filter(|i| !i.critical_line_only).count();
        assert_eq!(plane_count, 29);
        assert!(identity_info("FE-COMP").is_some());
        assert!(identity_info("NO-SUCH-ID").is_none());
        assert!(evaluate("NO-SUCH-ID", ComplexPoint::new(0.3, 8.0), &CFG).is_err());
    }

    #[test]
    fn reflection_components_pass_off_line() {
        for id in ["FE-COMP", "FE-INV", "MAG-RATIO", "ARG-FE", "VARIANT"] {
            let e = evaluate(id, ComplexPoint::new(0.3, 8.0), &CFG).unwrap();
            assert_eq!(e.status, EvalStatus::Passed, "{id}: rel={}", e.rel_residual);
        }
    }

    #[test]
    fn derivative_relations_pass_off_line() {
        for id in [
            "XLINE-R", "XLINE-I", "DINV-R", "DINV-I", "DFWD-R", "DFWD-I", "DMAG", "TANB",
            "TANB-INV", "RLOG", "RLOG-TILDE", "FE-RAW-R", "FE-RAW-I",
        ] {
            let e = evaluate(id, ComplexPoint::new(0.7, 13.7), &CFG).unwrap();
            assert_eq!(e.status, EvalStatus::Passed, "{id}: rel={}", e.rel_residual);
        }
    }

    #[test]
    fn critical_line_ids_force_half() {
        let e = evaluate("ZMAIN", ComplexPoint::new(0.3, 10.0), &CFG).unwrap();
        assert_eq!(e.sigma, 0.5);
        assert_eq!(e.status, EvalStatus::Passed);
    }

    #[test]
    fn asymptotic_id_skips_below_validity() {
        let e = evaluate("THETA-ASY", ComplexPoint::new(0.5, 2.0), &CFG).unwrap();
        assert_eq!(e.status, EvalStatus::SkippedSingular);
        let e = evaluate("THETA-ASY", ComplexPoint::new(0.5, 21.0), &CFG).unwrap();
        assert_eq!(e.status, EvalStatus::Passed);
    }

    #[test]
    fn cos_theta_skips_on_critical_line() {
        let e = evaluate("COS-THETA", ComplexPoint::new(0.5, 8.0), &CFG).unwrap();
        assert_eq!(e.status, EvalStatus::SkippedSingular);
        let e = evaluate("COS-THETA", ComplexPoint::new(0.3, 8.0), &CFG).unwrap();
        assert_eq!(e.status, EvalStatus::Passed);
    }

    #[test]
    fn exprep_skips_over_a_zero() {
        // [13.2, 14.2] straddles the first zero ordinate: the integrand has
        // a pole and the identity must be skipped, not failed.
        let e = evaluate("EXPREP", ComplexPoint::new(0.5, 14.2), &CFG).unwrap();
        assert_eq!(e.status, EvalStatus::SkippedSingular);
        let e = evaluate("EXPREP", ComplexPoint::new(0.5, 8.0), &CFG).unwrap();
        assert_eq!(e.status, EvalStatus::Passed);
    }

    #[test]
    fn interval_representation_matches_frozen_values() {
        let r = exp_representation(15.0, 20.0, &CFG).unwrap();
        assert!((r.integral - 0.4664680990570607).abs() < 1e-7);
        assert!((r.magnitude_ratio / r.exponential - 1.0).abs() < 1e-7);
    }

    #[test]
    fn det0_is_exact() {
        let e = evaluate("DET0", ComplexPoint::new(0.5, 33.0), &CFG).unwrap();
        assert!(e.abs_residual < 1e-12);
    }

    #[test]
    fn sweep_small_grid_has_no_failures() {
        let pts = [
            ComplexPoint::new(0.3, 8.0),
            ComplexPoint::new(0.5, 10.0),
            ComplexPoint::new(0.75, 2.0),
        ];
        let rows = sweep(&pts, &CFG, REL_TOL_DEFAULT).unwrap();
        let failed: Vec<_> = rows
            .iter()
            .filter(|r| r.status == EvalStatus::Failed)
            .collect();
        assert!(
            failed.is_empty(),
            "failing ids: {:?}",
            failed
                .iter()
                .map(|r| (r.id, r.sigma, r.rho, r.rel_residual))
                .collect::<Vec<_>>()
        );
    }

    #[test]
    fn csv_row_is_stable() {
        let e = evaluate("DET0", ComplexPoint::new(0.5, 2.0), &CFG).unwrap();
        let row = csv_row(&e);
        assert!(row.starts_with("DET0,5.00000000000000e-1,2.00000000000000e0,"));
        assert!(row.ends_with(",passed"));
    }
}
