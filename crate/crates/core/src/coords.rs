//! Generalized polar charts on the quadric domains of a flat metric.
//!
//! In the definite signature the chart is the ordinary hyperspherical one.
//! In the indefinite signature the sign of the quadratic form splits the
//! space into three charted domains: the upper and lower cone interiors and
//! the cone exterior.  All four cases share one product structure
//!
//! `u^m = r * C_{m+1} * S_1 * ... * S_m`
//!
//! where only the first factor pair `(C_1, S_1)` depends on the domain; the
//! middle pairs are always `(cos, sin)` and the closing factors are
//! `C_D = 1`, `S_D = 0`.  The leading pair is chosen so that
//! `eta00 * C_1^2 + S_1^2` equals the sign of `u.u` on the domain.

use crate::jet::Real;
use crate::metric::{dot, Signature};
use serde::Serialize;
use thiserror::Error;

/// Charted domain of the quadric decomposition.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, Serialize)]
pub enum Domain {
    /// Whole punctured space of the definite metric.
    Euclid,
    /// Interior of the upper cone (`u.u < 0`, `u^0 > 0`).
    TimelikeUpper,
    /// Interior of the lower cone (`u.u < 0`, `u^0 < 0`).
    TimelikeLower,
    /// Exterior of the cone (`u.u > 0`).
    Spacelike,
}

impl Domain {
    pub fn signature(self) -> Signature {
        match self {
            Domain::Euclid => Signature::Euclid,
            _ => Signature::Minkowski,
        }
    }

    /// Sign of `u.u` on this domain.
    pub fn s_i(self) -> i64 {
        match self {
            Domain::Euclid | Domain::Spacelike => 1,
            Domain::TimelikeUpper | Domain::TimelikeLower => -1,
        }
    }

    pub fn s(self) -> f64 {
        self.s_i() as f64
    }

    /// All charted domains of a signature.
    pub fn all(sig: Signature) -> &'static [Domain] {
        match sig {
            Signature::Euclid => &[Domain::Euclid],
            Signature::Minkowski => &[
                Domain::TimelikeUpper,
                Domain::TimelikeLower,
                Domain::Spacelike,
            ],
        }
    }

    /// Leading factor pair `(C_1, S_1)` as a function of the first angle.
    pub fn leading_pair<T: Real>(self, a: T) -> (T, T) {
        match self {
            Domain::Euclid => (a.clone().cos(), a.sin()),
            Domain::TimelikeUpper => (a.clone().cosh(), a.sinh()),
            Domain::TimelikeLower => (-a.clone().cosh(), -a.sinh()),
            Domain::Spacelike => (a.clone().sinh(), -a.cosh()),
        }
    }
}

/// Chart point: quadric radius plus `D - 1` angles.  The first angle is the
/// rapidity-like coordinate in the indefinite domains; middle angles live in
/// `[0, pi]` and the last in `[0, 2*pi)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SphericalPoint {
    pub r: f64,
    pub angles: Vec<f64>,
}

impl SphericalPoint {
    pub fn new(r: f64, angles: Vec<f64>) -> Self {
        SphericalPoint { r, angles }
    }

    pub fn dim(&self) -> usize {
        self.angles.len() + 1
    }
}

/// Cached factor table for one chart point: `c[m] = C_{m+1}`, `s[m] = S_{m+1}`
/// (so the closing entries are `c[D-1] = 1`, `s[D-1] = 0`) and the products
/// `p[m] = S_1 ... S_m` with `p[0] = 1`.
pub struct TrigCache<T> {
    pub c: Vec<T>,
    pub s: Vec<T>,
    pub p: Vec<T>,
}

impl<T: Real> TrigCache<T> {
    pub fn new(domain: Domain, angles: &[T]) -> Self {
        assert!(!angles.is_empty(), "charts need at least one angle");
        let d = angles.len() + 1;
        let one = angles[0].konst(1.0);
        let zero = angles[0].konst(0.0);
        let mut c = Vec::with_capacity(d);
        let mut s = Vec::with_capacity(d);
        for (n, a) in angles.iter().enumerate() {
            let (cn, sn) = if n == 0 {
                domain.leading_pair(a.clone())
            } else {
                (a.clone().cos(), a.clone().sin())
            };
            c.push(cn);
            s.push(sn);
        }
        c.push(one.clone());
        s.push(zero);
        let mut p = Vec::with_capacity(d);
        p.push(one);
        for m in 1..d {
            p.push(p[m - 1].clone() * s[m - 1].clone());
        }
        TrigCache { c, s, p }
    }

    /// Angle derivative of the pair `(C_n, S_n)`, with `n` one-based.  The
    /// leading pair obeys the uniform rule `C_1' = -s*S_1`,
    /// `S_1' = s*eta00*C_1` in every domain.
    pub fn dpair(&self, domain: Domain, n: usize) -> (T, T) {
        if n == 1 {
            let s = domain.s();
            let eta = domain.signature().eta00();
            (
                self.s[0].clone() * self.s[0].konst(-s),
                self.c[0].clone() * self.c[0].konst(s * eta),
            )
        } else {
            (-self.s[n - 1].clone(), self.c[n - 1].clone())
        }
    }
}

/// Chart map: `u^m = r * C_{m+1} * P_m`.
pub fn to_cartesian<T: Real>(domain: Domain, r: &T, angles: &[T]) -> Vec<T> {
    let cache = TrigCache::new(domain, angles);
    let d = angles.len() + 1;
    (0..d)
        .map(|m| r.clone() * cache.c[m].clone() * cache.p[m].clone())
        .collect()
}

pub fn to_cartesian_point(domain: Domain, point: &SphericalPoint) -> Vec<f64> {
    to_cartesian(domain, &point.r, &point.angles)
}

/// Analytic partial `du^m/dtheta_n` (`n` one-based).  Cross-checked against
/// jet evaluation of the chart map in the tests.
pub fn partial_u(domain: Domain, r: f64, angles: &[f64], m: usize, n: usize) -> f64 {
    let d = angles.len() + 1;
    assert!(m < d && n >= 1 && n < d);
    let cache = TrigCache::<f64>::new(domain, angles);
    let (dc, ds) = cache.dpair(domain, n);
    let mut out = 0.0;
    if n <= m {
        // S_n is one factor of P_m: differentiate it inside the product.
        let mut prod = 1.0;
        for k in 1..=m {
            prod *= if k == n { ds } else { cache.s[k - 1] };
        }
        out += r * cache.c[m] * prod;
    }
    if n == m + 1 {
        out += r * dc * cache.p[m];
    }
    out
}

/// Radial partial `du^m/dr`.
pub fn partial_u_r(domain: Domain, angles: &[f64], m: usize) -> f64 {
    let cache = TrigCache::<f64>::new(domain, angles);
    cache.c[m] * cache.p[m]
}

#[derive(Debug, Error, PartialEq)]
pub enum CoordsError {
    #[error("chart needs at least two dimensions, got {0}")]
    DimensionTooSmall(usize),
    #[error("quadric radius vanishes (u.u = {norm}); the chart excludes the cone")]
    DegenerateRadius { norm: f64 },
    #[error("vector lies outside the reach of this chart")]
    OutOfChart,
    #[error("vector has non-finite components")]
    NonFinite,
}

/// Assign a vector to its charted domain.  In the definite signature there
/// is only one; in the indefinite one the sign of `u.u` and of `u^0` decide.
/// Cone vectors (`u.u = 0`) are attached to the interior side matching the
/// sign of `u^0`, though they cannot be charted.
pub fn classify_domain(sig: Signature, u: &[f64]) -> Domain {
    match sig {
        Signature::Euclid => Domain::Euclid,
        Signature::Minkowski => {
            let n = dot(sig, u, u);
            if n > 0.0 {
                Domain::Spacelike
            } else if u[0] >= 0.0 {
                Domain::TimelikeUpper
            } else {
                Domain::TimelikeLower
            }
        }
    }
}

/// Invert the ordinary sphere chart: given `v` of length `d >= 2`, produce
/// the `d - 1` angles with middle range `[0, pi]` and last range `[0, 2*pi)`.
/// Exactly zero tails freeze the remaining angles at zero.
fn invert_sphere(v: &[f64], angles: &mut [f64]) {
    let d = v.len();
    debug_assert_eq!(angles.len(), d - 1);
    for m in 1..=d.saturating_sub(2) {
        let tail: f64 = v[m - 1..].iter().map(|x| x * x).sum::<f64>().sqrt();
        if tail == 0.0 {
            return;
        }
        angles[m - 1] = (v[m - 1] / tail).clamp(-1.0, 1.0).acos();
    }
    let (x, y) = (v[d - 2], v[d - 1]);
    if x == 0.0 && y == 0.0 {
        return;
    }
    let mut a = y.atan2(x);
    if a < 0.0 {
        a += 2.0 * std::f64::consts::PI;
    }
    angles[d - 2] = a;
}

/// Exact inverse of the chart map.  Returns the domain together with the
/// canonical chart point reproducing `u` under [`to_cartesian`].
pub fn from_cartesian(sig: Signature, u: &[f64]) -> Result<(Domain, SphericalPoint), CoordsError> {
    let d = u.len();
    if d < 2 {
        return Err(CoordsError::DimensionTooSmall(d));
    }
    if u.iter().any(|x| !x.is_finite()) {
        return Err(CoordsError::NonFinite);
    }
    let domain = classify_domain(sig, u);
    let norm = dot(sig, u, u);
    let r2 = domain.s() * norm;
    if r2 <= 0.0 {
        return Err(CoordsError::DegenerateRadius { norm });
    }
    let r = r2.sqrt();
    let mut angles = vec![0.0; d - 1];
    match domain {
        Domain::Euclid => invert_sphere(u, &mut angles),
        Domain::TimelikeUpper | Domain::TimelikeLower => {
            let upper = domain == Domain::TimelikeUpper;
            if d == 2 {
                // u^1 = +-r*sinh(tau); no further angles to absorb a sign.
                let arg = if upper { u[1] / r } else { -u[1] / r };
                angles[0] = arg.asinh();
            } else {
                // Canonical branch keeps S_1 >= 0: tau >= 0 above, <= 0 below.
                let arg = (u[0].abs() / r).max(1.0);
                angles[0] = if upper { arg.acosh() } else { -arg.acosh() };
                invert_sphere(&u[1..], &mut angles[1..]);
            }
        }
        Domain::Spacelike => {
            angles[0] = (u[0] / r).asinh();
            if d == 2 {
                // The single spatial factor is -r*cosh(tau) < 0, so the
                // chart only reaches the negative half-line.
                if u[1] > 0.0 {
                    return Err(CoordsError::OutOfChart);
                }
            } else {
                let w: Vec<f64> = u[1..].iter().map(|x| -x).collect();
                invert_sphere(&w, &mut angles[1..]);
            }
        }
    }
    Ok((domain, SphericalPoint::new(r, angles)))
}
