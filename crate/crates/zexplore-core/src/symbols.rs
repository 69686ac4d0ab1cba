//! The scalar symbol set and component bundles consumed by every identity.
//!
//! All formulas are the exact defining combinations of gamma, digamma and
//! elementary functions at the point `s = sigma + i rho`; "tilde" quantities
//! refer to the reflected point `1 - sigma + i rho`.

use crate::complexfn::{self, TWO_PI};
use crate::jet::Jet2;
use crate::{ComplexPoint, ComplexValue, EvalConfig, EvalError};

const PI: f64 = core::f64::consts::PI;
const LN_TWO_PI: f64 = 1.8378770664093455;

/// Every scalar symbol of the notation set, evaluated at one point.
///
/// Definitions (with `G = Gamma(s)`, `psi = digamma(s)`,
/// `theta = Im LogGamma(s)` continuous, `ch = cosh(pi rho)`):
///
/// * `c0 = (cos(pi sigma) + ch) / 2`
/// * `s1 = sin(rho_pi) cos(pi sigma/2) cosh(pi rho/2) + cos(rho_pi) sin(pi sigma/2) sinh(pi rho/2)`
/// * `s2 = sin(rho_pi) sin(pi sigma/2) sinh(pi rho/2) - cos(rho_pi) cos(pi sigma/2) cosh(pi rho/2)`
/// * `g1 = 4 Im(G) s2 + 4 Re(G) s1`, `g2 = 4 Im(G) s1 - 4 Re(G) s2`
/// * `psi1 = Im psi`, `psi2 = -2 ln(2 pi) + 2 Re psi`
/// * `p1 = 8 c0 psi1 - 2 pi sinh(pi rho)`, `p2 = 4 c0 psi2 - 2 pi sin(pi sigma)`
/// * `q1 = -p2 / (4 c0)`, `q2 = p1 / (4 c0)`
/// * `h1 = -g1 p1 + g2 p2`, `h2 = g1 p2 + g2 p1`,
///   `h3 = -g1 p2 + g2 p1`, `h4 = g1 p1 + g2 p2`
/// * `a = g1 / (4 sqrt(2 pi))`, `b = g2 / (4 sqrt(2 pi))`
/// * `rho_pi = rho ln(2 pi)`, `rho_theta = rho_pi - theta`
/// * `phi = (2 pi)^(2 sigma) / (4 c0 |G|^2)` — the squared magnitude ratio
///   `|zeta(s)|^2 / |zeta(1 - sigma + i rho)|^2`
/// * `zeta_p = zeta_I g1 + zeta_R g2`, `zeta_m = zeta_I g2 - zeta_R g1`,
///   `zeta_d = -(2 pi)^sigma (p1 zeta'_I + p2 zeta'_R)`
#[derive(Debug, Clone, Copy)]
pub struct SymbolSet {
    pub sigma: f64,
    pub rho: f64,
    pub c0: f64,
    pub g1: f64,
    pub g2: f64,
    pub s1: f64,
    pub s2: f64,
    pub p1: f64,
    pub p2: f64,
    pub q1: f64,
    pub q2: f64,
    pub h1: f64,
    pub h2: f64,
    pub h3: f64,
    pub h4: f64,
    pub a: f64,
    pub b: f64,
    pub f_s: ComplexValue,
    pub f_rho: f64,
    pub chi: ComplexValue,
    pub pi_sigma: f64,
    pub psi1: f64,
    pub psi2: f64,
    pub rho_pi: f64,
    pub rho_theta: f64,
    pub zeta_p: f64,
    pub zeta_m: f64,
    pub zeta_d: f64,
    pub phi: f64,
    pub gamma_abs: f64,
    pub theta_cont: f64,
    /// Components of `Gamma(s)` (convenience for the component identities).
    pub gamma_re: f64,
    pub gamma_im: f64,
    /// `psi(s)` itself (convenience).
    pub psi: ComplexValue,
}

/// The twelve primitive components: zeta, its first two `d/ds` derivatives,
/// and the same at the reflected point `1 - sigma + i rho`.
///
/// All primed components are `d/ds` derivatives evaluated at the respective
/// point; `rho`-derivatives of moduli and angles are formed where needed via
/// `d/drho = i d/ds`.
#[derive(Debug, Clone, Copy)]
pub struct ZetaBundle {
    pub zr: f64,
    pub zi: f64,
    pub z1r: f64,
    pub z1i: f64,
    pub z2r: f64,
    pub z2i: f64,
    pub tzr: f64,
    pub tzi: f64,
    pub tz1r: f64,
    pub tz1i: f64,
    pub tz2r: f64,
    pub tz2i: f64,
}

impl ZetaBundle {
    pub fn z(&self) -> ComplexValue {
        ComplexValue::new(self.zr, self.zi)
    }
    pub fn z1(&self) -> ComplexValue {
        ComplexValue::new(self.z1r, self.z1i)
    }
    pub fn z2(&self) -> ComplexValue {
        ComplexValue::new(self.z2r, self.z2i)
    }
    pub fn tz(&self) -> ComplexValue {
        ComplexValue::new(self.tzr, self.tzi)
    }
    pub fn tz1(&self) -> ComplexValue {
        ComplexValue::new(self.tz1r, self.tz1i)
    }
    pub fn tz2(&self) -> ComplexValue {
        ComplexValue::new(self.tz2r, self.tz2i)
    }

    pub fn from_jets(at_s: &Jet2, at_reflected: &Jet2) -> Self {
        Self {
            zr: at_s.v.re,
            zi: at_s.v.im,
            z1r: at_s.d1.re,
            z1i: at_s.d1.im,
            z2r: at_s.d2.re,
            z2i: at_s.d2.im,
            tzr: at_reflected.v.re,
            tzi: at_reflected.v.im,
            tz1r: at_reflected.d1.re,
            tz1i: at_reflected.d1.im,
            tz2r: at_reflected.d2.re,
            tz2i: at_reflected.d2.im,
        }
    }
}

/// Evaluate the full symbol set at `s`.
pub fn build_symbols(s: ComplexPoint, cfg: &EvalConfig) -> Result<SymbolSet, EvalError> {
    let sigma = s.sigma;
    let rho = s.rho;
    let g = complexfn::gamma(s)?;
    let lg = complexfn::log_gamma(s)?;
    let psi = complexfn::digamma(s)?;
    let jet = complexfn::zeta_jet(s, cfg)?;

    let c0 = (libm::cos(PI * sigma) + libm::cosh(PI * rho)) / 2.0;
    let rho_pi = rho * LN_TWO_PI;
    let theta_cont = lg.im;
    let rho_theta = rho_pi - theta_cont;

    let (sh_half, ch_half) = (libm::sinh(PI * rho / 2.0), libm::cosh(PI * rho / 2.0));
    let (sin_rp, cos_rp) = (libm::sin(rho_pi), libm::cos(rho_pi));
    let (sin_hs, cos_hs) = (libm::sin(PI * sigma / 2.0), libm::cos(PI * sigma / 2.0));
    let s1 = sin_rp * cos_hs * ch_half + cos_rp * sin_hs * sh_half;
    let s2 = sin_rp * sin_hs * sh_half - cos_rp * cos_hs * ch_half;
    let g1 = 4.0 * g.im * s2 + 4.0 * g.re * s1;
    let g2 = 4.0 * g.im * s1 - 4.0 * g.re * s2;

    let psi1 = psi.im;
    let psi2 = -2.0 * LN_TWO_PI + 2.0 * psi.re;
    let p1 = 8.0 * c0 * psi1 - 2.0 * PI * libm::sinh(PI * rho);
    let p2 = 4.0 * c0 * psi2 - 2.0 * PI * libm::sin(PI * sigma);
    let q1 = -psi2 + PI / 2.0 * libm::sin(PI * sigma) / c0;
    let q2 = 2.0 * psi1 - PI / 2.0 * libm::sinh(PI * rho) / c0;

    let h1 = -g1 * p1 + g2 * p2;
    let h2 = g1 * p2 + g2 * p1;
    let h3 = -g1 * p2 + g2 * p1;
    let h4 = g1 * p1 + g2 * p2;

    let sqrt_two_pi = libm::sqrt(TWO_PI);
    let a = g1 / (4.0 * sqrt_two_pi);
    let b = g2 / (4.0 * sqrt_two_pi);

    let pi_sigma = libm::pow(TWO_PI, sigma);
    let gamma_abs = complexfn::modulus(g);
    let phi = libm::pow(TWO_PI, 2.0 * sigma) / (4.0 * c0 * gamma_abs * gamma_abs);

    let zeta_p = jet.v.im * g1 + jet.v.re * g2;
    let zeta_m = jet.v.im * g2 - jet.v.re * g1;
    let zeta_d = -pi_sigma * (p1 * jet.d1.im + p2 * jet.d1.re);

    Ok(SymbolSet {
        sigma,
        rho,
        c0,
        g1,
        g2,
        s1,
        s2,
        p1,
        p2,
        q1,
        q2,
        h1,
        h2,
        h3,
        h4,
        a,
        b,
        f_s: complexfn::f_s(s)?,
        f_rho: complexfn::f_rho(rho, cfg)?,
        chi: complexfn::chi(s)?,
        pi_sigma,
        psi1,
        psi2,
        rho_pi,
        rho_theta,
        zeta_p,
        zeta_m,
        zeta_d,
        phi,
        gamma_abs,
        theta_cont,
        gamma_re: g.re,
        gamma_im: g.im,
        psi,
    })
}

/// Evaluate the twelve-component bundle at `s` (and its reflection).
pub fn build_bundle(s: ComplexPoint, cfg: &EvalConfig) -> Result<ZetaBundle, EvalError> {
    let at_s = complexfn::zeta_jet(s, cfg)?;
    let at_r = complexfn::zeta_jet(s.reflect(), cfg)?;
    Ok(ZetaBundle::from_jets(&at_s, &at_r))
}

/// Large-ordinate expansions of `Re psi`, `Im psi`, `p1`, `p2`.
#[derive(Debug, Clone, Copy)]
pub struct AsymptoticSymbols {
    pub psi_re: f64,
    pub psi_im: f64,
    pub p1: f64,
    pub p2: f64,
}

/// Large-`rho` expansions, valid for `rho >= 20`:
///
/// * `Re psi ~ ln(rho) + (6 sigma^2 - 6 sigma + 1) / (12 rho^2)`
/// * `Im psi ~ pi/2 - (2 sigma - 1)/(2 rho) + sigma (sigma - 1)(2 sigma - 1)/(6 rho^3)`
///
/// and the matching expansions of `p1`, `p2` obtained by substituting these
/// into their defining combinations (dropping terms beyond all orders,
/// `e^{-pi rho}`).
pub fn asymptotic_symbols(s: ComplexPoint) -> Result<AsymptoticSymbols, EvalError> {
    let sigma = s.sigma;
    let rho = s.rho;
    if rho < 20.0 {
        return Err(EvalError::Domain("asymptotic forms require rho >= 20"));
    }
    let k2 = 6.0 * sigma * sigma - 6.0 * sigma + 1.0;
    let k3 = sigma * (sigma - 1.0) * (2.0 * sigma - 1.0);
    let psi_re = libm::log(rho) + k2 / (12.0 * rho * rho);
    let psi_im = PI / 2.0 - (2.0 * sigma - 1.0) / (2.0 * rho) + k3 / (6.0 * rho * rho * rho);

    let e_pi_rho = libm::exp(PI * rho);
    let cs = libm::cos(PI * sigma);
    let p1 = (-(2.0 * sigma - 1.0) / rho + k3 / (3.0 * rho * rho * rho)) * e_pi_rho
        + 2.0 * PI * cs
        - 2.0 * (2.0 * sigma - 1.0) * cs / rho
        + 2.0 / 3.0 * k3 * cs / (rho * rho * rho);
    let ln_r2 = libm::log(rho * rho / (4.0 * PI * PI));
    let p2 = (ln_r2 + k2 / (6.0 * rho * rho)) * e_pi_rho + cs * 2.0 * ln_r2
        - 2.0 * PI * libm::sin(PI * sigma)
        + k2 * cs / (3.0 * rho * rho);
    Ok(AsymptoticSymbols {
        psi_re,
        psi_im,
        p1,
        p2,
    })
}
