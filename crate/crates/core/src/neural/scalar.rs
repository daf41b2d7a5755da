//! Scalar abstraction shared by every differentiable code path.
//!
//! PDE residuals, exact solutions and network forward passes are written
//! once against [`Scalar`] and then instantiated with plain floats, with
//! truncated Taylor jets (input derivatives), with tape variables
//! (parameter gradients), or with jets of tape variables (both at once).
//!
//! This is deliberately narrower than `num_traits::Float`: tape variables
//! carry a tape handle and cannot offer the full float API, but they
//! support exactly the ring-plus-elementary-functions surface below.

use std::ops::{Add, Div, Mul, Neg, Sub};

/// The operations a value must support to flow through residuals,
/// networks and exact solutions.
pub trait Scalar:
    Copy
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// Lift a constant. Constants never carry derivatives.
    fn from_f64(value: f64) -> Self;

    fn sin(self) -> Self;
    fn cos(self) -> Self;
    fn exp(self) -> Self;
    fn tanh(self) -> Self;
    fn cosh(self) -> Self;
}

impl Scalar for f64 {
    #[inline(always)]
    fn from_f64(value: f64) -> Self {
        value
    }
    #[inline(always)]
    fn sin(self) -> Self {
        f64::sin(self)
    }
    #[inline(always)]
    fn cos(self) -> Self {
        f64::cos(self)
    }
    #[inline(always)]
    fn exp(self) -> Self {
        f64::exp(self)
    }
    #[inline(always)]
    fn tanh(self) -> Self {
        f64::tanh(self)
    }
    #[inline(always)]
    fn cosh(self) -> Self {
        f64::cosh(self)
    }
}

/// Forward-mode gradient number carrying `N` directional derivatives.
///
/// Used to extract exact partials of a residual with respect to the jet
/// components feeding it; the component count is tiny so the arrays stay
/// on the stack.
#[derive(Clone, Copy, Debug)]
pub struct GradN<const N: usize> {
    pub value: f64,
    pub deriv: [f64; N],
}

impl<const N: usize> GradN<N> {
    /// Constant with zero derivatives.
    pub fn constant(value: f64) -> Self {
        Self { value, deriv: [0.0; N] }
    }

    /// Variable seeded in slot `slot`.
    pub fn variable(value: f64, slot: usize) -> Self {
        let mut deriv = [0.0; N];
        deriv[slot] = 1.0;
        Self { value, deriv }
    }

    fn map_unary(self, value: f64, dfdx: f64) -> Self {
        let mut deriv = [0.0; N];
        for i in 0..N {
            deriv[i] = dfdx * self.deriv[i];
        }
        Self { value, deriv }
    }
}

impl<const N: usize> Add for GradN<N> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut deriv = self.deriv;
        for i in 0..N {
            deriv[i] += rhs.deriv[i];
        }
        Self { value: self.value + rhs.value, deriv }
    }
}

impl<const N: usize> Sub for GradN<N> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let mut deriv = self.deriv;
        for i in 0..N {
            deriv[i] -= rhs.deriv[i];
        }
        Self { value: self.value - rhs.value, deriv }
    }
}

impl<const N: usize> Mul for GradN<N> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut deriv = [0.0; N];
        for i in 0..N {
            deriv[i] = self.deriv[i] * rhs.value + self.value * rhs.deriv[i];
        }
        Self { value: self.value * rhs.value, deriv }
    }
}

impl<const N: usize> Div for GradN<N> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let inv = 1.0 / rhs.value;
        let mut deriv = [0.0; N];
        for i in 0..N {
            deriv[i] = (self.deriv[i] - self.value * inv * rhs.deriv[i]) * inv;
        }
        Self { value: self.value * inv, deriv }
    }
}

impl<const N: usize> Neg for GradN<N> {
    type Output = Self;
    fn neg(self) -> Self {
        let mut deriv = [0.0; N];
        for i in 0..N {
            deriv[i] = -self.deriv[i];
        }
        Self { value: -self.value, deriv }
    }
}

impl<const N: usize> Scalar for GradN<N> {
    fn from_f64(value: f64) -> Self {
        Self::constant(value)
    }
    fn sin(self) -> Self {
        self.map_unary(self.value.sin(), self.value.cos())
    }
    fn cos(self) -> Self {
        self.map_unary(self.value.cos(), -self.value.sin())
    }
    fn exp(self) -> Self {
        let e = self.value.exp();
        self.map_unary(e, e)
    }
    fn tanh(self) -> Self {
        let t = self.value.tanh();
        self.map_unary(t, 1.0 - t * t)
    }
    fn cosh(self) -> Self {
        self.map_unary(self.value.cosh(), self.value.sinh())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn finite_diff(f: impl Fn(f64) -> f64, x: f64) -> f64 {
        let h = 1e-6;
        (f(x + h) - f(x - h)) / (2.0 * h)
    }

    #[test]
    fn gradn_matches_finite_differences() {
        let f = |x: GradN<1>| {
            let c = GradN::from_f64(0.7);
            (x * x + c).tanh() * x.sin() / (x.exp() + GradN::from_f64(2.0))
        };
        let f_plain = |x: f64| (x * x + 0.7).tanh() * x.sin() / (x.exp() + 2.0);
        for &x0 in &[-1.3, -0.2, 0.5, 1.7] {
            let out = f(GradN::variable(x0, 0));
            assert!((out.value - f_plain(x0)).abs() < 1e-14);
            let fd = finite_diff(f_plain, x0);
            assert!(
                (out.deriv[0] - fd).abs() < 1e-7 * fd.abs().max(1.0),
                "x={x0}: ad={} fd={fd}",
                out.deriv[0]
            );
        }
    }
}
