//! Numerical engine for exploring the Riemann functional equation.
//!
//! The crate evaluates the zeta function and its first two derivatives, the
//! gamma/log-gamma/digamma family, the scalar symbol set built from them, a
//! large registry of exact identities linking values across the line
//! `sigma = 1/2`, continuous-argument tracking, critical-line zero location,
//! and a constructed functional-equation solution with off-line zeros.
//!
//! The crate is `no_std` (with `alloc`); everything IO-related lives in the
//! companion CLI crate.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod argtrack;
pub mod complexfn;
pub mod counterexample;
pub mod identities;
pub mod jet;
pub mod quad;
pub mod symbols;
pub mod zeros;

use core::fmt;

/// Complex values are plain double-precision complex numbers.
pub type ComplexValue = num_complex::Complex64;

/// A point `s = sigma + i*rho` of the complex plane.
///
/// `rho > 0` wherever identities are evaluated; limits toward `rho = 0` are
/// taken explicitly by the callers that need them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexPoint {
    pub sigma: f64,
    pub rho: f64,
}

impl ComplexPoint {
    pub const fn new(sigma: f64, rho: f64) -> Self {
        Self { sigma, rho }
    }

    /// The complex number `sigma + i*rho`.
    pub fn s(&self) -> ComplexValue {
        ComplexValue::new(self.sigma, self.rho)
    }

    /// The point reflected through the critical line: `1 - sigma + i*rho`
    /// (same ordinate, mirrored abscissa).
    pub fn reflect(&self) -> ComplexPoint {
        ComplexPoint::new(1.0 - self.sigma, self.rho)
    }

    /// True when the point lies on the critical line.
    pub fn on_critical_line(&self) -> bool {
        self.sigma == 0.5
    }
}

impl From<ComplexValue> for ComplexPoint {
    fn from(z: ComplexValue) -> Self {
        ComplexPoint::new(z.re, z.im)
    }
}

/// Tuning knobs for the series evaluations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalConfig {
    /// Direct-sum cutoff `N` for the Euler-Maclaurin evaluation (minimum 10;
    /// the evaluator raises it with the ordinate automatically).
    pub euler_maclaurin_terms: usize,
    /// Number of Bernoulli correction terms `M`, between 1 and 15.
    pub bernoulli_terms: usize,
    /// Absolute-error target for series truncation.
    pub target_abs_tol: f64,
}

impl Default for EvalConfig {
    fn default() -> Self {
        Self {
            euler_maclaurin_terms: 20,
            bernoulli_terms: 10,
            target_abs_tol: 1e-12,
        }
    }
}

impl EvalConfig {
    /// Check the documented parameter ranges.
    pub fn validate(&self) -> Result<(), EvalError> {
        if self.euler_maclaurin_terms < 10 {
            return Err(EvalError::Domain("euler_maclaurin_terms must be >= 10"));
        }
        if self.bernoulli_terms < 1 || self.bernoulli_terms > 15 {
            return Err(EvalError::Domain("bernoulli_terms must be in 1..=15"));
        }
        if !(self.target_abs_tol >= 1e-13) {
            return Err(EvalError::Domain("target_abs_tol must be >= 1e-13"));
        }
        Ok(())
    }
}

/// Errors surfaced by the evaluators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EvalError {
    /// The requested point sits on (or within 1e-8 of) a pole of the
    /// function being evaluated.
    Pole { re: f64, im: f64 },
    /// A truncation-error estimate exceeded the configured tolerance.
    Accuracy { estimate: f64, tol: f64 },
    /// The point lies outside the operation's documented domain.
    Domain(&'static str),
    /// Adaptive stepping in the argument tracker collapsed below its floor,
    /// indicating passage arbitrarily close to a zero.
    StepCollapse { rho: f64 },
    /// A branch-counter residual failed to round to an integer multiple of
    /// pi, indicating a tracking fault.
    NonIntegerResidual { residual_over_pi: f64 },
    /// A value would overflow the representable range (exponential growth
    /// guard in the constructed-solution module).
    Overflow { rho: f64 },
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::Pole { re, im } => write!(f, "pole at ({re}, {im})"),
            EvalError::Accuracy { estimate, tol } => {
                write!(f, "accuracy target missed: estimate {estimate} > tol {tol}")
            }
            EvalError::Domain(msg) => write!(f, "domain error: {msg}"),
            EvalError::StepCollapse { rho } => write!(f, "step collapse near rho = {rho}"),
            EvalError::NonIntegerResidual { residual_over_pi } => {
                write!(f, "non-integer branch residual: {residual_over_pi} pi")
            }
            EvalError::Overflow { rho } => write!(f, "overflow guard tripped at rho = {rho}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reflect_mirrors_sigma() {
        let p = ComplexPoint::new(0.25, 8.0);
        let r = p.reflect();
        assert_eq!(r.sigma, 0.75);
        assert_eq!(r.rho, 8.0);
        assert_eq!(r.reflect(), p);
    }

    #[test]
    fn config_validation() {
        assert!(EvalConfig::default().validate().is_ok());
        let bad = EvalConfig {
            euler_maclaurin_terms: 5,
            ..EvalConfig::default()
        };
        assert!(bad.validate().is_err());
        let bad = EvalConfig {
            bernoulli_terms: 0,
            ..EvalConfig::default()
        };
        assert!(bad.validate().is_err());
        let bad = EvalConfig {
            target_abs_tol: 1e-14,
            ..EvalConfig::default()
        };
        assert!(bad.validate().is_err());
    }
}
