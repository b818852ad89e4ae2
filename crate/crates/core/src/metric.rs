//! Flat diagonal metrics `diag(eta, 1, ..., 1)` of either signature, inner
//! products over real and complex vectors, and the pinned tolerances shared
//! by the verification suites.

use crate::jet::Real;
use num_complex::Complex64;
use serde::Serialize;

/// Signature of the flat metric: the `00` component is `+1` in the definite
/// case and `-1` in the indefinite one; all spatial components are `+1`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, Serialize)]
pub enum Signature {
    Euclid,
    Minkowski,
}

impl Signature {
    pub fn eta00(self) -> f64 {
        match self {
            Signature::Euclid => 1.0,
            Signature::Minkowski => -1.0,
        }
    }

    pub fn eta00_i(self) -> i64 {
        match self {
            Signature::Euclid => 1,
            Signature::Minkowski => -1,
        }
    }

    /// Diagonal metric component `eta_mumu`; the inverse metric has the same
    /// entries.
    pub fn eta(self, mu: usize) -> f64 {
        if mu == 0 {
            self.eta00()
        } else {
            1.0
        }
    }
}

/// Metric inner product of two real vectors, generic over plain values and
/// jets.
pub fn dot<T: Real>(sig: Signature, a: &[T], b: &[T]) -> T {
    assert_eq!(a.len(), b.len());
    let mut acc = a[0].clone() * b[0].clone();
    if sig == Signature::Minkowski {
        acc = -acc;
    }
    for i in 1..a.len() {
        acc = acc + a[i].clone() * b[i].clone();
    }
    acc
}

/// Bilinear (unconjugated) metric product of complex vectors.
pub fn cdot(sig: Signature, a: &[Complex64], b: &[Complex64]) -> Complex64 {
    assert_eq!(a.len(), b.len());
    let mut acc = a[0] * b[0] * sig.eta00();
    for i in 1..a.len() {
        acc += a[i] * b[i];
    }
    acc
}

/// Sesquilinear metric product `a . conj(b)`.
pub fn cdot_conj(sig: Signature, a: &[Complex64], b: &[Complex64]) -> Complex64 {
    assert_eq!(a.len(), b.len());
    let mut acc = a[0] * b[0].conj() * sig.eta00();
    for i in 1..a.len() {
        acc += a[i] * b[i].conj();
    }
    acc
}

/// Numeric tolerances pinned across every suite.  `fd_step` is the central
/// difference step used by the derivative oracles.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Tolerances {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub fd_step: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            abs_tol: 1e-9,
            rel_tol: 1e-7,
            fd_step: 1e-5,
        }
    }
}

/// Scaled discrepancy `|a - b| / max(1, |a|, |b|)`: behaves like an absolute
/// error for small magnitudes and a relative one for large.
pub fn scaled_err(a: f64, b: f64) -> f64 {
    (a - b).abs() / 1.0_f64.max(a.abs()).max(b.abs())
}
