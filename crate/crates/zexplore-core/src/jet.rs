//! Second-order forward-mode differentiation over complex numbers.
//!
//! A [`Jet2`] carries a value together with its first and second derivative
//! with respect to a single complex variable. Propagating jets through the
//! Euler-Maclaurin series gives the zeta derivatives by exact term-wise
//! differentiation instead of finite differencing.

use crate::ComplexValue;
use core::ops::{Add, Div, Mul, Neg, Sub};

/// Value, first and second derivative with respect to one complex variable.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet2 {
    pub v: ComplexValue,
    pub d1: ComplexValue,
    pub d2: ComplexValue,
}

impl Jet2 {
    /// The independent variable itself: value `z`, unit first derivative.
    pub fn var(z: ComplexValue) -> Self {
        Self {
            v: z,
            d1: ComplexValue::new(1.0, 0.0),
            d2: ComplexValue::new(0.0, 0.0),
        }
    }

    /// A constant: zero derivatives.
    pub fn konst(z: ComplexValue) -> Self {
        Self {
            v: z,
            d1: ComplexValue::new(0.0, 0.0),
            d2: ComplexValue::new(0.0, 0.0),
        }
    }

    pub fn real_konst(x: f64) -> Self {
        Self::konst(ComplexValue::new(x, 0.0))
    }

    /// `exp` of the jet: `(e^v, e^v v', e^v (v'' + v'^2))`.
    pub fn exp(self) -> Self {
        let e = self.v.exp();
        Self {
            v: e,
            d1: e * self.d1,
            d2: e * (self.d2 + self.d1 * self.d1),
        }
    }

    /// Reciprocal of the jet: `(1/v, -v'/v^2, 2v'^2/v^3 - v''/v^2)`.
    pub fn recip(self) -> Self {
        let inv = ComplexValue::new(1.0, 0.0) / self.v;
        let inv2 = inv * inv;
        Self {
            v: inv,
            d1: -self.d1 * inv2,
            d2: (self.d1 * self.d1 * inv * 2.0 - self.d2) * inv2,
        }
    }

    /// Multiply by a constant scalar.
    pub fn scale(self, c: ComplexValue) -> Self {
        Self {
            v: self.v * c,
            d1: self.d1 * c,
            d2: self.d2 * c,
        }
    }

    /// `c^self` for a positive real constant base: `exp(self * ln c)`.
    pub fn const_pow(self, base: f64) -> Self {
        let lnb = libm::log(base);
        self.scale(ComplexValue::new(lnb, 0.0)).exp()
    }
}

impl Add for Jet2 {
    type Output = Jet2;
    fn add(self, rhs: Jet2) -> Jet2 {
        Jet2 {
            v: self.v + rhs.v,
            d1: self.d1 + rhs.d1,
            d2: self.d2 + rhs.d2,
        }
    }
}

impl Sub for Jet2 {
    type Output = Jet2;
    fn sub(self, rhs: Jet2) -> Jet2 {
        Jet2 {
            v: self.v - rhs.v,
            d1: self.d1 - rhs.d1,
            d2: self.d2 - rhs.d2,
        }
    }
}

impl Neg for Jet2 {
    type Output = Jet2;
    fn neg(self) -> Jet2 {
        Jet2 {
            v: -self.v,
            d1: -self.d1,
            d2: -self.d2,
        }
    }
}

impl Mul for Jet2 {
    type Output = Jet2;
    fn mul(self, rhs: Jet2) -> Jet2 {
        Jet2 {
            v: self.v * rhs.v,
            d1: self.v * rhs.d1 + self.d1 * rhs.v,
            d2: self.v * rhs.d2 + self.d1 * rhs.d1 * 2.0 + self.d2 * rhs.v,
        }
    }
}

impl Div for Jet2 {
    type Output = Jet2;
    fn div(self, rhs: Jet2) -> Jet2 {
        self * rhs.recip()
    }
}
