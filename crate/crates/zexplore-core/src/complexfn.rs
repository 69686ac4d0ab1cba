//! Complex special-function engine: zeta with two derivatives, gamma,
//! log-gamma with a continuous imaginary part, digamma and trigamma.
//!
//! Everything is double precision. Zeta uses Euler-Maclaurin summation with
//! term-wise jet differentiation, uniformly valid across the strip and up to
//! ordinates around 100. Gamma uses a Lanczos approximation with reflection;
//! log-gamma and the psi functions use recurrence shifts into the region
//! where the Stirling-type series converges fast.

use crate::jet::Jet2;
use crate::{ComplexPoint, ComplexValue, EvalConfig, EvalError};

/// Bernoulli numbers B_2, B_4, ..., B_32.
const BERNOULLI_EVEN: [f64; 16] = [
    0.16666666666666666,
    -0.033333333333333333,
    0.023809523809523808,
    -0.033333333333333333,
    0.075757575757575758,
    -0.25311355311355311,
    1.1666666666666667,
    -7.0921568627450980,
    54.971177944862155,
    -529.12424242424242,
    6192.1231884057971,
    -86580.253113553114,
    1425517.1666666667,
    -27298231.067816092,
    601580873.90064236,
    -15116315767.092157,
];

const LN_TWO_PI: f64 = 1.8378770664093455;
const HALF_LN_TWO_PI: f64 = 0.91893853320467274;
pub const TWO_PI: f64 = 6.2831853071795865;
const PI: f64 = core::f64::consts::PI;

/// Map `atan2`'s range onto `(-pi, pi]`.
pub fn principal_arg(z: ComplexValue) -> f64 {
    let a = libm::atan2(z.im, z.re);
    if a <= -PI {
        a + 2.0 * PI
    } else {
        a
    }
}

/// `|z|` without over/underflow surprises.
pub fn modulus(z: ComplexValue) -> f64 {
    libm::hypot(z.re, z.im)
}

fn near_nonpositive_integer(z: ComplexValue) -> bool {
    if libm::fabs(z.im) > 1e-8 {
        return false;
    }
    let r = libm::round(z.re);
    r <= 0.0 && libm::fabs(z.re - r) < 1e-8
}

/// Zeta and its first two `d/ds` derivatives in one Euler-Maclaurin pass.
///
/// `N = max(cfg cutoff, ceil(1.3 rho))` direct terms, `M` Bernoulli
/// corrections; the first omitted correction term is used as the truncation
/// estimate and must stay below `cfg.target_abs_tol`.
pub fn zeta_jet(s: ComplexPoint, cfg: &EvalConfig) -> Result<Jet2, EvalError> {
    cfg.validate()?;
    let z = s.s();
    if (z - ComplexValue::new(1.0, 0.0)).norm() < 1e-8 {
        return Err(EvalError::Pole { re: 1.0, im: 0.0 });
    }
    let n = cfg
        .euler_maclaurin_terms
        .max(libm::ceil(1.3 * libm::fabs(s.rho)) as usize)
        .max(10);
    let m = cfg.bernoulli_terms;

    let sj = Jet2::var(z);
    let one = Jet2::real_konst(1.0);

    let mut acc = Jet2::konst(ComplexValue::new(0.0, 0.0));
    for k in 1..n {
        acc = acc + (-sj).const_pow(k as f64);
    }
    let nf = n as f64;
    // Tail integral N^{1-s}/(s-1) and boundary term N^{-s}/2.
    acc = acc + (one - sj).const_pow(nf) / (sj - one);
    let n_pow_minus_s = (-sj).const_pow(nf);
    acc = acc + n_pow_minus_s.scale(ComplexValue::new(0.5, 0.0));

    // Correction terms B_{2j}/(2j)! * s(s+1)...(s+2j-2) * N^{-s-2j+1}.
    let mut poch = sj; // rising factorial with 2j-1 factors, starting at s
    let mut fact = 2.0; // (2j)!
    let mut next_estimate = 0.0;
    for j in 1..=m {
        let coeff = BERNOULLI_EVEN[j - 1] / fact;
        let npow = (-sj - Jet2::real_konst(2.0 * j as f64 - 1.0)).const_pow(nf);
        acc = acc + (poch * npow).scale(ComplexValue::new(coeff, 0.0));
        // Prepare the next term; its magnitude doubles as the tail estimate.
        let a = 2.0 * j as f64;
        fact *= (a + 1.0) * (a + 2.0);
        poch = poch * (sj + Jet2::real_konst(a - 1.0)) * (sj + Jet2::real_konst(a));
        if j == m {
            let b_next = if m < 16 { BERNOULLI_EVEN[m] } else { BERNOULLI_EVEN[15] };
            let npow_next =
                (-sj - Jet2::real_konst(2.0 * (j + 1) as f64 - 1.0)).const_pow(nf);
            next_estimate = modulus(poch.v * npow_next.v) * libm::fabs(b_next / fact);
        }
    }
    if next_estimate > cfg.target_abs_tol {
        return Err(EvalError::Accuracy {
            estimate: next_estimate,
            tol: cfg.target_abs_tol,
        });
    }
    Ok(acc)
}

/// `zeta(s)`.
pub fn zeta(s: ComplexPoint, cfg: &EvalConfig) -> Result<ComplexValue, EvalError> {
    Ok(zeta_jet(s, cfg)?.v)
}

/// First `d/ds` derivative of zeta.
pub fn zeta_d1(s: ComplexPoint, cfg: &EvalConfig) -> Result<ComplexValue, EvalError> {
    Ok(zeta_jet(s, cfg)?.d1)
}

/// Second `d/ds` derivative of zeta.
pub fn zeta_d2(s: ComplexPoint, cfg: &EvalConfig) -> Result<ComplexValue, EvalError> {
    Ok(zeta_jet(s, cfg)?.d2)
}

/// Lanczos coefficients (g = 7, 9 terms).
const LANCZOS: [f64; 9] = [
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
];

fn gamma_core(z: ComplexValue) -> ComplexValue {
    // Valid for Re(z) >= 0.5.
    let zm1 = z - ComplexValue::new(1.0, 0.0);
    let mut x = ComplexValue::new(LANCZOS[0], 0.0);
    for (k, c) in LANCZOS.iter().enumerate().skip(1) {
        x += ComplexValue::new(*c, 0.0) / (zm1 + ComplexValue::new(k as f64, 0.0));
    }
    let t = zm1 + ComplexValue::new(7.5, 0.0);
    let sqrt_two_pi = 2.5066282746310002;
    t.powc(zm1 + ComplexValue::new(0.5, 0.0)) * (-t).exp() * x * sqrt_two_pi
}

/// `Gamma(s)` with relative accuracy around 1e-13 for `|s| <= 100`.
pub fn gamma(s: ComplexPoint) -> Result<ComplexValue, EvalError> {
    let z = s.s();
    if near_nonpositive_integer(z) {
        return Err(EvalError::Pole { re: z.re, im: z.im });
    }
    if z.re >= 0.5 {
        Ok(gamma_core(z))
    } else {
        // Reflection: Gamma(z) = pi / (sin(pi z) Gamma(1 - z)).
        let sin_piz = (z * PI).sin();
        Ok(ComplexValue::new(PI, 0.0) / (sin_piz * gamma_core(ComplexValue::new(1.0, 0.0) - z)))
    }
}

/// `Log Gamma(s)` for `Re(s) > 0` with the imaginary part continuous along
/// any upward path in `rho` (no re-wrapping to the principal branch).
///
/// The argument is shifted by the recurrence `LogGamma(z) = LogGamma(z+1) -
/// Log(z)` until `Re >= 10`, where the Stirling series applies. Every factor
/// in the shift lies in the right half-plane, so each principal logarithm is
/// itself continuous in `rho` and the assembled branch never jumps.
pub fn log_gamma(s: ComplexPoint) -> Result<ComplexValue, EvalError> {
    if s.sigma <= 0.0 {
        return Err(EvalError::Domain("log_gamma requires sigma > 0"));
    }
    let mut z = s.s();
    let mut shift = ComplexValue::new(0.0, 0.0);
    while z.re < 10.0 {
        shift += z.ln();
        z += ComplexValue::new(1.0, 0.0);
    }
    let zinv2 = (z * z).inv();
    // Sum B_{2j} / (2j (2j-1) z^{2j-1}) for j = 1..=8.
    let mut series = ComplexValue::new(0.0, 0.0);
    let mut zp = z.inv();
    for j in 1..=8usize {
        let a = 2.0 * j as f64;
        series += zp * (BERNOULLI_EVEN[j - 1] / (a * (a - 1.0)));
        zp *= zinv2;
    }
    let lg = (z - ComplexValue::new(0.5, 0.0)) * z.ln() - z
        + ComplexValue::new(HALF_LN_TWO_PI, 0.0)
        + series;
    Ok(lg - shift)
}

/// Digamma `psi(s)`, absolute accuracy around 1e-13 for `|s| <= 100`.
pub fn digamma(s: ComplexPoint) -> Result<ComplexValue, EvalError> {
    let z0 = s.s();
    if near_nonpositive_integer(z0) {
        return Err(EvalError::Pole { re: z0.re, im: z0.im });
    }
    let mut z = z0;
    let mut shift = ComplexValue::new(0.0, 0.0);
    while z.re < 10.0 {
        shift += z.inv();
        z += ComplexValue::new(1.0, 0.0);
    }
    let zinv2 = (z * z).inv();
    let mut series = ComplexValue::new(0.0, 0.0);
    let mut zp = zinv2;
    for j in 1..=8usize {
        series += zp * (BERNOULLI_EVEN[j - 1] / (2.0 * j as f64));
        zp *= zinv2;
    }
    Ok(z.ln() - z.inv() * 0.5 - series - shift)
}

/// Trigamma `psi'(s)` by the same shift-then-series scheme.
pub fn trigamma(s: ComplexPoint) -> Result<ComplexValue, EvalError> {
    let z0 = s.s();
    if near_nonpositive_integer(z0) {
        return Err(EvalError::Pole { re: z0.re, im: z0.im });
    }
    let mut z = z0;
    let mut shift = ComplexValue::new(0.0, 0.0);
    while z.re < 10.0 {
        shift += (z * z).inv();
        z += ComplexValue::new(1.0, 0.0);
    }
    let zinv = z.inv();
    let zinv2 = zinv * zinv;
    let mut series = ComplexValue::new(0.0, 0.0);
    let mut zp = zinv2 * zinv;
    for j in 1..=8usize {
        series += zp * BERNOULLI_EVEN[j - 1];
        zp *= zinv2;
    }
    Ok(zinv + zinv2 * 0.5 + series + shift)
}

/// The reflection multiplier `chi(s) = 2 (2 pi)^(-s) cos(pi s / 2) Gamma(s)`,
/// satisfying `zeta(1 - s) = chi(s) * zeta(s)`. Across the critical line at
/// fixed ordinate this reads `zeta(reflect(s)) = conj(chi(s) * zeta(s))`,
/// since both zeta and chi commute with conjugation.
pub fn chi(s: ComplexPoint) -> Result<ComplexValue, EvalError> {
    let z = s.s();
    let g = gamma(s)?;
    let pref = (-z * LN_TWO_PI).exp() * 2.0;
    Ok(pref * (z * (PI / 2.0)).cos() * g)
}

/// The logarithmic-derivative combination
/// `f(s) = ln(2 pi) - psi(s) + (pi/2) tan(pi s / 2)`,
/// equal to minus the logarithmic derivative of [`chi`].
pub fn f_s(s: ComplexPoint) -> Result<ComplexValue, EvalError> {
    let z = s.s();
    let half_pi_z = z * (PI / 2.0);
    let c = half_pi_z.cos();
    if modulus(c) < 1e-8 {
        return Err(EvalError::Pole { re: z.re, im: z.im });
    }
    let t = half_pi_z.sin() / c;
    Ok(ComplexValue::new(LN_TWO_PI, 0.0) - digamma(s)? + t * (PI / 2.0))
}

/// Critical-line profile `f(rho) = 4 cosh(pi rho) / (2 ln(2 pi) cosh(pi rho)
/// - 2 Re psi(1/2 + i rho) cosh(pi rho) + pi)`; the real value of `2/f_s` on
/// the critical line.
pub fn f_rho(rho: f64, _cfg: &EvalConfig) -> Result<f64, EvalError> {
    let psi_re = digamma(ComplexPoint::new(0.5, rho))?.re;
    let ch = libm::cosh(PI * rho);
    let denom = 2.0 * LN_TWO_PI * ch - 2.0 * psi_re * ch + PI;
    if libm::fabs(denom) < 1e-300 {
        return Err(EvalError::Pole { re: 0.5, im: rho });
    }
    Ok(4.0 * ch / denom)
}

/// `d/drho` of [`f_rho`], from the trigamma closed form of the denominator's
/// derivative: with `E = 2 ln(2 pi) - 2 Re psi + pi sech(pi rho)`,
/// `f = 4/E` and `f' = -4 E'/E^2`, `E' = 2 Im psi'(1/2 + i rho)
/// - pi^2 sech(pi rho) tanh(pi rho)`.
pub fn f_rho_d1(rho: f64, _cfg: &EvalConfig) -> Result<f64, EvalError> {
    let p = ComplexPoint::new(0.5, rho);
    let psi_re = digamma(p)?.re;
    let sech = 1.0 / libm::cosh(PI * rho);
    let e = 2.0 * LN_TWO_PI - 2.0 * psi_re + PI * sech;
    let e_d1 = 2.0 * trigamma(p)?.im - PI * PI * sech * libm::tanh(PI * rho);
    if libm::fabs(e) < 1e-300 {
        return Err(EvalError::Pole { re: 0.5, im: rho });
    }
    Ok(-4.0 * e_d1 / (e * e))
}
