//! Forward-mode automatic differentiation carried to second order, plus the
//! central finite-difference helpers the tests use to cross-check it.
//!
//! A [`Jet2`] tracks a value, a gradient and a full Hessian with respect to
//! `n` seed variables.  Chart maps and scalar fields are written once against
//! the [`Real`] trait and can then be evaluated either on plain `f64` or on
//! jets, which is what makes the independent operator realizations cheap to
//! compare.

use std::ops::{Add, Div, Mul, Neg, Sub};

/// Scalar abstraction: arithmetic plus the elementary functions used by the
/// charts and the field batteries.  Implemented for `f64` and [`Jet2`].
pub trait Real:
    Clone
    + std::fmt::Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// A constant living in the same seed space as `self`; jets cannot make
    /// constants out of thin air because they need the seed dimension.
    fn konst(&self, x: f64) -> Self;
    /// Underlying point value (derivative information discarded).
    fn value(&self) -> f64;
    fn sin(self) -> Self;
    fn cos(self) -> Self;
    fn sinh(self) -> Self;
    fn cosh(self) -> Self;
    fn exp(self) -> Self;
    fn ln(self) -> Self;
    fn sqrt(self) -> Self;
    fn recip(self) -> Self;
    fn powi(self, k: i32) -> Self;
    fn asin(self) -> Self;
    fn acos(self) -> Self;
    fn atan(self) -> Self;
    fn asinh(self) -> Self;
    fn acosh(self) -> Self;
    fn atan2(self, x: Self) -> Self;
}

impl Real for f64 {
    fn konst(&self, x: f64) -> Self {
        x
    }
    fn value(&self) -> f64 {
        *self
    }
    fn sin(self) -> Self {
        f64::sin(self)
    }
    fn cos(self) -> Self {
        f64::cos(self)
    }
    fn sinh(self) -> Self {
        f64::sinh(self)
    }
    fn cosh(self) -> Self {
        f64::cosh(self)
    }
    fn exp(self) -> Self {
        f64::exp(self)
    }
    fn ln(self) -> Self {
        f64::ln(self)
    }
    fn sqrt(self) -> Self {
        f64::sqrt(self)
    }
    fn recip(self) -> Self {
        f64::recip(self)
    }
    fn powi(self, k: i32) -> Self {
        f64::powi(self, k)
    }
    fn asin(self) -> Self {
        f64::asin(self)
    }
    fn acos(self) -> Self {
        f64::acos(self)
    }
    fn atan(self) -> Self {
        f64::atan(self)
    }
    fn asinh(self) -> Self {
        f64::asinh(self)
    }
    fn acosh(self) -> Self {
        f64::acosh(self)
    }
    fn atan2(self, x: Self) -> Self {
        f64::atan2(self, x)
    }
}

/// Second order jet over `n` variables: value, gradient and Hessian.
///
/// The Hessian is stored densely as an `n x n` row-major matrix and is kept
/// symmetric by construction.
#[derive(Clone, Debug, PartialEq)]
pub struct Jet2 {
    pub v: f64,
    g: Vec<f64>,
    h: Vec<f64>,
    n: usize,
}

impl Jet2 {
    pub fn constant(v: f64, n: usize) -> Self {
        Jet2 {
            v,
            g: vec![0.0; n],
            h: vec![0.0; n * n],
            n,
        }
    }

    /// Seed variable `i` of `n` at point value `v`.
    pub fn var(v: f64, i: usize, n: usize) -> Self {
        let mut j = Jet2::constant(v, n);
        j.g[i] = 1.0;
        j
    }

    /// Seed one jet per component of `x`.
    pub fn vars(x: &[f64]) -> Vec<Self> {
        let n = x.len();
        x.iter()
            .enumerate()
            .map(|(i, &v)| Jet2::var(v, i, n))
            .collect()
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn grad(&self, i: usize) -> f64 {
        self.g[i]
    }

    pub fn hess(&self, i: usize, j: usize) -> f64 {
        self.h[i * self.n + j]
    }

    /// Compose with a scalar function given its first two derivatives at
    /// `self.v`: the chain rule for the gradient and Hessian.
    pub fn compose(&self, f: f64, f1: f64, f2: f64) -> Jet2 {
        let n = self.n;
        let mut out = Jet2::constant(f, n);
        for i in 0..n {
            out.g[i] = f1 * self.g[i];
        }
        for i in 0..n {
            for j in 0..n {
                out.h[i * n + j] = f1 * self.h[i * n + j] + f2 * self.g[i] * self.g[j];
            }
        }
        out
    }

    fn binary(a: &Jet2, b: &Jet2, f: f64, fa: f64, fb: f64, faa: f64, fab: f64, fbb: f64) -> Jet2 {
        assert_eq!(a.n, b.n, "jets must share their seed space");
        let n = a.n;
        let mut out = Jet2::constant(f, n);
        for i in 0..n {
            out.g[i] = fa * a.g[i] + fb * b.g[i];
        }
        for i in 0..n {
            for j in 0..n {
                out.h[i * n + j] = fa * a.h[i * n + j]
                    + fb * b.h[i * n + j]
                    + faa * a.g[i] * a.g[j]
                    + fab * (a.g[i] * b.g[j] + b.g[i] * a.g[j])
                    + fbb * b.g[i] * b.g[j];
            }
        }
        out
    }

    pub fn scale(&self, c: f64) -> Jet2 {
        let mut out = self.clone();
        out.v *= c;
        for x in &mut out.g {
            *x *= c;
        }
        for x in &mut out.h {
            *x *= c;
        }
        out
    }

    pub fn shift(&self, c: f64) -> Jet2 {
        let mut out = self.clone();
        out.v += c;
        out
    }
}

impl Add for Jet2 {
    type Output = Jet2;
    fn add(self, rhs: Jet2) -> Jet2 {
        Jet2::binary(&self, &rhs, self.v + rhs.v, 1.0, 1.0, 0.0, 0.0, 0.0)
    }
}

impl Sub for Jet2 {
    type Output = Jet2;
    fn sub(self, rhs: Jet2) -> Jet2 {
        Jet2::binary(&self, &rhs, self.v - rhs.v, 1.0, -1.0, 0.0, 0.0, 0.0)
    }
}

impl Mul for Jet2 {
    type Output = Jet2;
    fn mul(self, rhs: Jet2) -> Jet2 {
        Jet2::binary(&self, &rhs, self.v * rhs.v, rhs.v, self.v, 0.0, 1.0, 0.0)
    }
}

impl Div for Jet2 {
    type Output = Jet2;
    fn div(self, rhs: Jet2) -> Jet2 {
        self * rhs.recip()
    }
}

impl Neg for Jet2 {
    type Output = Jet2;
    fn neg(self) -> Jet2 {
        self.scale(-1.0)
    }
}

impl Real for Jet2 {
    fn konst(&self, x: f64) -> Self {
        Jet2::constant(x, self.n)
    }
    fn value(&self) -> f64 {
        self.v
    }
    fn sin(self) -> Self {
        self.compose(self.v.sin(), self.v.cos(), -self.v.sin())
    }
    fn cos(self) -> Self {
        self.compose(self.v.cos(), -self.v.sin(), -self.v.cos())
    }
    fn sinh(self) -> Self {
        self.compose(self.v.sinh(), self.v.cosh(), self.v.sinh())
    }
    fn cosh(self) -> Self {
        self.compose(self.v.cosh(), self.v.sinh(), self.v.cosh())
    }
    fn exp(self) -> Self {
        let e = self.v.exp();
        self.compose(e, e, e)
    }
    fn ln(self) -> Self {
        self.compose(self.v.ln(), self.v.recip(), -self.v.powi(-2))
    }
    fn sqrt(self) -> Self {
        let s = self.v.sqrt();
        self.compose(s, 0.5 / s, -0.25 / (s * s * s))
    }
    fn recip(self) -> Self {
        let r = self.v.recip();
        self.compose(r, -r * r, 2.0 * r * r * r)
    }
    fn powi(self, k: i32) -> Self {
        let v = self.v;
        self.compose(
            v.powi(k),
            f64::from(k) * v.powi(k - 1),
            f64::from(k) * f64::from(k - 1) * v.powi(k - 2),
        )
    }
    fn asin(self) -> Self {
        let d = (1.0 - self.v * self.v).sqrt();
        self.compose(self.v.asin(), d.recip(), self.v / (d * d * d))
    }
    fn acos(self) -> Self {
        let d = (1.0 - self.v * self.v).sqrt();
        self.compose(self.v.acos(), -d.recip(), -self.v / (d * d * d))
    }
    fn atan(self) -> Self {
        let d = 1.0 + self.v * self.v;
        self.compose(self.v.atan(), d.recip(), -2.0 * self.v / (d * d))
    }
    fn asinh(self) -> Self {
        let d = (1.0 + self.v * self.v).sqrt();
        self.compose(self.v.asinh(), d.recip(), -self.v / (d * d * d))
    }
    fn acosh(self) -> Self {
        let d = (self.v * self.v - 1.0).sqrt();
        self.compose(self.v.acosh(), d.recip(), -self.v / (d * d * d))
    }
    fn atan2(self, x: Self) -> Self {
        let (y0, x0) = (self.v, x.v);
        let r2 = x0 * x0 + y0 * y0;
        Jet2::binary(
            &self,
            &x,
            y0.atan2(x0),
            x0 / r2,
            -y0 / r2,
            -2.0 * x0 * y0 / (r2 * r2),
            (y0 * y0 - x0 * x0) / (r2 * r2),
            2.0 * x0 * y0 / (r2 * r2),
        )
    }
}

/// Central first differences of `f` at `x`.
pub fn fd_gradient(f: &dyn Fn(&[f64]) -> f64, x: &[f64], step: f64) -> Vec<f64> {
    let n = x.len();
    let mut g = vec![0.0; n];
    let mut xp = x.to_vec();
    for i in 0..n {
        xp[i] = x[i] + step;
        let fp = f(&xp);
        xp[i] = x[i] - step;
        let fm = f(&xp);
        xp[i] = x[i];
        g[i] = (fp - fm) / (2.0 * step);
    }
    g
}

/// Central second differences of `f` at `x`, returned as a dense `n x n`
/// symmetric matrix.
pub fn fd_hessian(f: &dyn Fn(&[f64]) -> f64, x: &[f64], step: f64) -> Vec<f64> {
    let n = x.len();
    let f0 = f(x);
    let mut h = vec![0.0; n * n];
    let mut xp = x.to_vec();
    for i in 0..n {
        xp[i] = x[i] + step;
        let fp = f(&xp);
        xp[i] = x[i] - step;
        let fm = f(&xp);
        xp[i] = x[i];
        h[i * n + i] = (fp - 2.0 * f0 + fm) / (step * step);
        for j in (i + 1)..n {
            xp[i] = x[i] + step;
            xp[j] = x[j] + step;
            let fpp = f(&xp);
            xp[j] = x[j] - step;
            let fpm = f(&xp);
            xp[i] = x[i] - step;
            let fmm = f(&xp);
            xp[j] = x[j] + step;
            let fmp = f(&xp);
            xp[i] = x[i];
            xp[j] = x[j];
            let v = (fpp - fpm - fmp + fmm) / (4.0 * step * step);
            h[i * n + j] = v;
            h[j * n + i] = v;
        }
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    // A deliberately tangled composite exercising most of the table.
    fn battery(x: &[f64]) -> f64 {
        let a = (x[0] * x[1]).sin() + (0.3 * x[2]).cosh();
        let b = (1.5 + x[0] * x[0]).ln() * (0.7 * x[1]).exp();
        let c = (2.0 + x[2].sin()).sqrt() + x[1].atan2(1.0 + x[0] * x[0]);
        a * b + c / (1.2 + a * a)
    }

    fn battery_jet(x: &[Jet2]) -> Jet2 {
        let n = x[0].nvars();
        let k = |c: f64| Jet2::constant(c, n);
        let a = (x[0].clone() * x[1].clone()).sin() + (x[2].scale(0.3)).cosh();
        let b = (k(1.5) + x[0].clone() * x[0].clone()).ln() * (x[1].scale(0.7)).exp();
        let c = (k(2.0) + x[2].clone().sin()).sqrt()
            + x[1].clone().atan2(k(1.0) + x[0].clone() * x[0].clone());
        a.clone() * b + c / (k(1.2) + a.clone() * a)
    }

    #[test]
    fn battery_matches_finite_differences() {
        let pts = [[0.4, -0.8, 1.3], [1.1, 0.5, -0.2], [-0.7, 0.9, 2.1]];
        for x in pts {
            let jet = battery_jet(&Jet2::vars(&x));
            assert_relative_eq!(jet.v, battery(&x), max_relative = 1e-12);
            let g = fd_gradient(&battery, &x, 1e-5);
            let h = fd_hessian(&battery, &x, 1e-4);
            for i in 0..3 {
                assert_relative_eq!(jet.grad(i), g[i], max_relative = 1e-7, epsilon = 1e-8);
                for j in 0..3 {
                    assert_relative_eq!(jet.hess(i, j), h[i * 3 + j], max_relative = 1e-5, epsilon = 1e-5);
                }
            }
        }
    }

    #[test]
    fn inverse_functions_roundtrip() {
        let pairs: [(fn(Jet2) -> Jet2, fn(Jet2) -> Jet2, f64); 4] = [
            (Jet2::sin, Jet2::asin, 0.6),
            (Jet2::cos, Jet2::acos, 0.6),
            (Jet2::sinh, Jet2::asinh, 0.6),
            (Jet2::cosh, Jet2::acosh, 1.7),
        ];
        for (f, finv, x0) in pairs {
            let back = finv(f(Jet2::var(x0, 0, 1)));
            assert_relative_eq!(back.v, x0, max_relative = 1e-12);
            assert_relative_eq!(back.grad(0), 1.0, max_relative = 1e-9);
            assert_relative_eq!(back.hess(0, 0), 0.0, epsilon = 1e-8);
        }
    }

    #[test]
    fn atan2_covers_all_quadrants() {
        for (y, x) in [(1.0, 2.0), (1.0, -2.0), (-1.0, -2.0), (-1.0, 2.0), (2.0, 0.5)] {
            let v = [y, x];
            let f = |p: &[f64]| p[0].atan2(p[1]);
            let js = Jet2::vars(&v);
            let jet = js[0].clone().atan2(js[1].clone());
            let g = fd_gradient(&f, &v, 1e-5);
            let h = fd_hessian(&f, &v, 1e-4);
            assert_relative_eq!(jet.v, f(&v), max_relative = 1e-12);
            for i in 0..2 {
                assert_relative_eq!(jet.grad(i), g[i], max_relative = 1e-6, epsilon = 1e-9);
                for j in 0..2 {
                    assert_relative_eq!(jet.hess(i, j), h[i * 2 + j], max_relative = 1e-4, epsilon = 1e-5);
                }
            }
        }
    }

    #[test]
    fn negative_powers_differentiate() {
        let x = Jet2::var(1.7, 0, 1);
        let j = x.powi(-3);
        assert_relative_eq!(j.v, 1.7f64.powi(-3), max_relative = 1e-13);
        assert_relative_eq!(j.grad(0), -3.0 * 1.7f64.powi(-4), max_relative = 1e-13);
        assert_relative_eq!(j.hess(0, 0), 12.0 * 1.7f64.powi(-5), max_relative = 1e-13);
    }

    proptest! {
        #[test]
        fn product_rule_is_symmetric(a in -2.0..2.0f64, b in -2.0..2.0f64) {
            let js = Jet2::vars(&[a, b]);
            let p = js[0].clone() * js[1].clone();
            prop_assert!((p.hess(0, 1) - 1.0).abs() < 1e-14);
            prop_assert!((p.hess(0, 1) - p.hess(1, 0)).abs() < 1e-14);
            prop_assert!(p.hess(0, 0).abs() < 1e-14);
        }

        #[test]
        fn exp_ln_cancel(x in 0.2..3.0f64) {
            let j = Jet2::var(x, 0, 1).exp().ln();
            prop_assert!((j.v - x).abs() < 1e-10);
            prop_assert!((j.grad(0) - 1.0).abs() < 1e-10);
            prop_assert!(j.hess(0, 0).abs() < 1e-8);
        }
    }
}
