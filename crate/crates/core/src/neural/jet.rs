//! Truncated Taylor jets for input derivatives.
//!
//! PINN residuals on the 1-D suite need exactly `{∂x, ∂t, ∂xx}` of the
//! network output, so a fixed four-slot bundle `(u, u_x, u_t, u_xx)` is
//! propagated through every primitive instead of a general higher-order
//! graph. No mixed `∂x∂t` slot is carried: none of the residuals use it,
//! and the chain rules below stay closed without it.
//!
//! [`Jet3`] is the 3+1-dimensional analogue used by the Beltrami flow:
//! first derivatives in `x, y, z, t` plus the three pure second spatial
//! derivatives.

use super::scalar::Scalar;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Value plus first/second input derivatives: `(u, u_x, u_t, u_xx)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Jet<T> {
    /// Function value.
    pub u: T,
    /// First derivative with respect to the spatial coordinate.
    pub du_dx: T,
    /// First derivative with respect to time.
    pub du_dt: T,
    /// Second derivative with respect to the spatial coordinate.
    pub d2u_dx2: T,
}

impl<T: Scalar> Jet<T> {
    /// Constant jet: all derivative slots zero.
    pub fn constant(u: T) -> Self {
        let zero = T::from_f64(0.0);
        Jet { u, du_dx: zero, du_dt: zero, d2u_dx2: zero }
    }

    /// Jet seeding the spatial coordinate (`du/dx = 1`).
    pub fn variable_x(x: T) -> Self {
        let zero = T::from_f64(0.0);
        Jet { u: x, du_dx: T::from_f64(1.0), du_dt: zero, d2u_dx2: zero }
    }

    /// Jet seeding the time coordinate (`du/dt = 1`).
    pub fn variable_t(t: T) -> Self {
        let zero = T::from_f64(0.0);
        Jet { u: t, du_dx: zero, du_dt: T::from_f64(1.0), d2u_dx2: zero }
    }

    /// Scale by a plain constant.
    pub fn scale(self, c: f64) -> Self {
        let c = T::from_f64(c);
        Jet {
            u: self.u * c,
            du_dx: self.du_dx * c,
            du_dt: self.du_dt * c,
            d2u_dx2: self.d2u_dx2 * c,
        }
    }

    /// Apply a scalar function given its first and second derivative at
    /// `self.u`.
    ///
    /// `d2u/dx2` picks up the curvature term `f''·(u_x)²` from the chain
    /// rule; `du/dt` stays first-order because no second time derivative
    /// is tracked.
    #[inline]
    pub fn chain(self, f: T, df: T, d2f: T) -> Self {
        Jet {
            u: f,
            du_dx: df * self.du_dx,
            du_dt: df * self.du_dt,
            d2u_dx2: d2f * self.du_dx * self.du_dx + df * self.d2u_dx2,
        }
    }
}

impl<T: Scalar> Add for Jet<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Jet {
            u: self.u + rhs.u,
            du_dx: self.du_dx + rhs.du_dx,
            du_dt: self.du_dt + rhs.du_dt,
            d2u_dx2: self.d2u_dx2 + rhs.d2u_dx2,
        }
    }
}

impl<T: Scalar> Sub for Jet<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Jet {
            u: self.u - rhs.u,
            du_dx: self.du_dx - rhs.du_dx,
            du_dt: self.du_dt - rhs.du_dt,
            d2u_dx2: self.d2u_dx2 - rhs.d2u_dx2,
        }
    }
}

impl<T: Scalar> Mul for Jet<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let two = T::from_f64(2.0);
        Jet {
            u: self.u * rhs.u,
            du_dx: self.du_dx * rhs.u + self.u * rhs.du_dx,
            du_dt: self.du_dt * rhs.u + self.u * rhs.du_dt,
            d2u_dx2: self.d2u_dx2 * rhs.u
                + two * self.du_dx * rhs.du_dx
                + self.u * rhs.d2u_dx2,
        }
    }
}

impl<T: Scalar> Div for Jet<T> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        // q = a/b: q' = (a' - q b')/b, q'' = (a'' - 2 q' b' - q b'')/b.
        let q = self.u / rhs.u;
        let qx = (self.du_dx - q * rhs.du_dx) / rhs.u;
        let qt = (self.du_dt - q * rhs.du_dt) / rhs.u;
        let two = T::from_f64(2.0);
        let qxx = (self.d2u_dx2 - two * qx * rhs.du_dx - q * rhs.d2u_dx2) / rhs.u;
        Jet { u: q, du_dx: qx, du_dt: qt, d2u_dx2: qxx }
    }
}

impl<T: Scalar> Neg for Jet<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Jet { u: -self.u, du_dx: -self.du_dx, du_dt: -self.du_dt, d2u_dx2: -self.d2u_dx2 }
    }
}

impl<T: Scalar> Scalar for Jet<T> {
    fn from_f64(value: f64) -> Self {
        Jet::constant(T::from_f64(value))
    }
    fn sin(self) -> Self {
        let s = self.u.sin();
        let c = self.u.cos();
        self.chain(s, c, -s)
    }
    fn cos(self) -> Self {
        let s = self.u.sin();
        let c = self.u.cos();
        self.chain(c, -s, -c)
    }
    fn exp(self) -> Self {
        let e = self.u.exp();
        self.chain(e, e, e)
    }
    fn tanh(self) -> Self {
        let th = self.u.tanh();
        let one = T::from_f64(1.0);
        let sech2 = one - th * th;
        // tanh'' = -2 tanh sech²
        self.chain(th, sech2, -(T::from_f64(2.0)) * th * sech2)
    }
    fn cosh(self) -> Self {
        let ch = self.u.cosh();
        let e = self.u.exp();
        let sh = (e - T::from_f64(1.0) / e) * T::from_f64(0.5);
        self.chain(ch, sh, ch)
    }
}

/// Jet for fields over `(x, y, z, t)`: value, the four first derivatives,
/// and the pure second spatial derivatives. Mixed seconds are not tracked
/// (the Beltrami residuals never use them).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Jet3<T> {
    pub u: T,
    pub du_dx: T,
    pub du_dy: T,
    pub du_dz: T,
    pub du_dt: T,
    pub d2u_dx2: T,
    pub d2u_dy2: T,
    pub d2u_dz2: T,
}

impl<T: Scalar> Jet3<T> {
    /// Constant jet.
    pub fn constant(u: T) -> Self {
        let z = T::from_f64(0.0);
        Jet3 { u, du_dx: z, du_dy: z, du_dz: z, du_dt: z, d2u_dx2: z, d2u_dy2: z, d2u_dz2: z }
    }

    /// Jet seeding coordinate `axis` (0 = x, 1 = y, 2 = z, 3 = t).
    pub fn variable(value: T, axis: usize) -> Self {
        let mut jet = Self::constant(value);
        let one = T::from_f64(1.0);
        match axis {
            0 => jet.du_dx = one,
            1 => jet.du_dy = one,
            2 => jet.du_dz = one,
            3 => jet.du_dt = one,
            _ => panic!("Jet3 axis out of range: {axis}"),
        }
        jet
    }

    #[inline]
    fn chain(self, f: T, df: T, d2f: T) -> Self {
        Jet3 {
            u: f,
            du_dx: df * self.du_dx,
            du_dy: df * self.du_dy,
            du_dz: df * self.du_dz,
            du_dt: df * self.du_dt,
            d2u_dx2: d2f * self.du_dx * self.du_dx + df * self.d2u_dx2,
            d2u_dy2: d2f * self.du_dy * self.du_dy + df * self.d2u_dy2,
            d2u_dz2: d2f * self.du_dz * self.du_dz + df * self.d2u_dz2,
        }
    }
}

impl<T: Scalar> Add for Jet3<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Jet3 {
            u: self.u + rhs.u,
            du_dx: self.du_dx + rhs.du_dx,
            du_dy: self.du_dy + rhs.du_dy,
            du_dz: self.du_dz + rhs.du_dz,
            du_dt: self.du_dt + rhs.du_dt,
            d2u_dx2: self.d2u_dx2 + rhs.d2u_dx2,
            d2u_dy2: self.d2u_dy2 + rhs.d2u_dy2,
            d2u_dz2: self.d2u_dz2 + rhs.d2u_dz2,
        }
    }
}

impl<T: Scalar> Sub for Jet3<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Scalar> Mul for Jet3<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let two = T::from_f64(2.0);
        Jet3 {
            u: self.u * rhs.u,
            du_dx: self.du_dx * rhs.u + self.u * rhs.du_dx,
            du_dy: self.du_dy * rhs.u + self.u * rhs.du_dy,
            du_dz: self.du_dz * rhs.u + self.u * rhs.du_dz,
            du_dt: self.du_dt * rhs.u + self.u * rhs.du_dt,
            d2u_dx2: self.d2u_dx2 * rhs.u + two * self.du_dx * rhs.du_dx + self.u * rhs.d2u_dx2,
            d2u_dy2: self.d2u_dy2 * rhs.u + two * self.du_dy * rhs.du_dy + self.u * rhs.d2u_dy2,
            d2u_dz2: self.d2u_dz2 * rhs.u + two * self.du_dz * rhs.du_dz + self.u * rhs.d2u_dz2,
        }
    }
}

impl<T: Scalar> Div for Jet3<T> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let q = self.u / rhs.u;
        let two = T::from_f64(2.0);
        let d1 = |a: T, b: T| (a - q * b) / rhs.u;
        let qx = d1(self.du_dx, rhs.du_dx);
        let qy = d1(self.du_dy, rhs.du_dy);
        let qz = d1(self.du_dz, rhs.du_dz);
        let qt = d1(self.du_dt, rhs.du_dt);
        Jet3 {
            u: q,
            du_dx: qx,
            du_dy: qy,
            du_dz: qz,
            du_dt: qt,
            d2u_dx2: (self.d2u_dx2 - two * qx * rhs.du_dx - q * rhs.d2u_dx2) / rhs.u,
            d2u_dy2: (self.d2u_dy2 - two * qy * rhs.du_dy - q * rhs.d2u_dy2) / rhs.u,
            d2u_dz2: (self.d2u_dz2 - two * qz * rhs.du_dz - q * rhs.d2u_dz2) / rhs.u,
        }
    }
}

impl<T: Scalar> Neg for Jet3<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Jet3 {
            u: -self.u,
            du_dx: -self.du_dx,
            du_dy: -self.du_dy,
            du_dz: -self.du_dz,
            du_dt: -self.du_dt,
            d2u_dx2: -self.d2u_dx2,
            d2u_dy2: -self.d2u_dy2,
            d2u_dz2: -self.d2u_dz2,
        }
    }
}

impl<T: Scalar> Scalar for Jet3<T> {
    fn from_f64(value: f64) -> Self {
        Jet3::constant(T::from_f64(value))
    }
    fn sin(self) -> Self {
        let s = self.u.sin();
        let c = self.u.cos();
        self.chain(s, c, -s)
    }
    fn cos(self) -> Self {
        let s = self.u.sin();
        let c = self.u.cos();
        self.chain(c, -s, -c)
    }
    fn exp(self) -> Self {
        let e = self.u.exp();
        self.chain(e, e, e)
    }
    fn tanh(self) -> Self {
        let th = self.u.tanh();
        let one = T::from_f64(1.0);
        let sech2 = one - th * th;
        self.chain(th, sech2, -(T::from_f64(2.0)) * th * sech2)
    }
    fn cosh(self) -> Self {
        let ch = self.u.cosh();
        let e = self.u.exp();
        let sh = (e - T::from_f64(1.0) / e) * T::from_f64(0.5);
        self.chain(ch, sh, ch)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// f(x,t) = sin(x)·exp(-t) + x²·t, all derivatives known in closed form.
    fn f_jet(x: f64, t: f64) -> Jet<f64> {
        let xj = Jet::variable_x(x);
        let tj = Jet::variable_t(t);
        xj.sin() * (-tj).exp() + xj * xj * tj
    }

    #[test]
    fn jet_reproduces_closed_form_derivatives() {
        for &(x, t) in &[(0.3, 0.7), (-1.1, 0.2), (2.0, 1.5)] {
            let jet = f_jet(x, t);
            let e = f64::exp(-t);
            assert!((jet.u - (x.sin() * e + x * x * t)).abs() < 1e-14);
            assert!((jet.du_dx - (x.cos() * e + 2.0 * x * t)).abs() < 1e-13);
            assert!((jet.du_dt - (-x.sin() * e + x * x)).abs() < 1e-13);
            assert!((jet.d2u_dx2 - (-x.sin() * e + 2.0 * t)).abs() < 1e-13);
        }
    }

    #[test]
    fn jet_division_is_consistent() {
        // g = sin(x)/cosh(x·t), compare against finite differences.
        let g = |x: f64, t: f64| x.sin() / (x * t).cosh();
        let jet = {
            let xj = Jet::variable_x(0.8);
            let tj = Jet::variable_t(0.4);
            xj.sin() / (xj * tj).cosh()
        };
        let h = 1e-5;
        let fd_x = (g(0.8 + h, 0.4) - g(0.8 - h, 0.4)) / (2.0 * h);
        let fd_t = (g(0.8, 0.4 + h) - g(0.8, 0.4 - h)) / (2.0 * h);
        let fd_xx = (g(0.8 + h, 0.4) - 2.0 * g(0.8, 0.4) + g(0.8 - h, 0.4)) / (h * h);
        assert!((jet.du_dx - fd_x).abs() < 1e-9);
        assert!((jet.du_dt - fd_t).abs() < 1e-9);
        assert!((jet.d2u_dx2 - fd_xx).abs() < 1e-5);
    }

    #[test]
    fn jet3_matches_finite_differences() {
        // f = exp(x)·sin(y + 2z)·cos(t) — smooth in all four coordinates.
        let f = |p: [f64; 4]| p[0].exp() * (p[1] + 2.0 * p[2]).sin() * p[3].cos();
        let at = [0.3, -0.6, 0.2, 0.9];
        let jets: Vec<Jet3<f64>> =
            (0..4).map(|axis| Jet3::variable(at[axis], axis)).collect();
        let two = Jet3::constant(2.0);
        let out = jets[0].exp() * (jets[1] + two * jets[2]).sin() * jets[3].cos();

        let h = 1e-5;
        for axis in 0..4 {
            let mut hi = at;
            let mut lo = at;
            hi[axis] += h;
            lo[axis] -= h;
            let fd = (f(hi) - f(lo)) / (2.0 * h);
            let ad = [out.du_dx, out.du_dy, out.du_dz, out.du_dt][axis];
            assert!((ad - fd).abs() < 1e-9, "axis {axis}: ad={ad} fd={fd}");
            if axis < 3 {
                let fd2 = (f(hi) - 2.0 * f(at) + f(lo)) / (h * h);
                let ad2 = [out.d2u_dx2, out.d2u_dy2, out.d2u_dz2][axis];
                assert!((ad2 - fd2).abs() < 1e-5, "axis {axis}: ad2={ad2} fd2={fd2}");
            }
        }
    }

    impl Jet3<f64> {
        fn scale3(self, c: f64) -> Self {
            self * Jet3::constant(c)
        }
    }
}
