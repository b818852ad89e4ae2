//! The quadratic invariant operator built from rotation/boost generators, in
//! three independent realizations that the suites compare pointwise:
//!
//! * a closed Cartesian form combining the wave operator with radial terms,
//! * a brute-force sum over squared generators (the oracle: nothing is
//!   simplified, every generator is applied through jets),
//! * a chart form expressed purely in the polar angles.
//!
//! The generator convention used throughout:
//! `apply(f; mu, nu) = u^nu d^mu f - u^mu d^nu f`, indices raised with the
//! diagonal metric.  Writing `R` for that map, the algebra closes as
//! `[R^{mn}, R^{ab}] = eta^{ma} R^{nb} + eta^{nb} R^{ma} - eta^{na} R^{mb}
//! - eta^{mb} R^{na}`, which the tests verify by nested application.

use crate::coords::{to_cartesian, Domain, SphericalPoint, TrigCache};
use crate::jet::{Jet2, Real};
use crate::metric::Signature;
use std::sync::Arc;
use thiserror::Error;

/// Scalar field described by a Cartesian jet evaluator, so every realization
/// can extract exactly the derivatives it needs.
#[derive(Clone)]
pub struct ScalarField {
    dim: usize,
    f: Arc<dyn Fn(&[Jet2]) -> Jet2 + Send + Sync>,
}

impl ScalarField {
    pub fn new(dim: usize, f: impl Fn(&[Jet2]) -> Jet2 + Send + Sync + 'static) -> Self {
        ScalarField {
            dim,
            f: Arc::new(f),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Value, gradient and Hessian at a Cartesian point.
    pub fn jet_at(&self, u: &[f64]) -> Jet2 {
        assert_eq!(u.len(), self.dim);
        (self.f)(&Jet2::vars(u))
    }

    pub fn eval(&self, u: &[f64]) -> f64 {
        self.jet_at(u).v
    }

    /// Compose with externally built jets (used by the chart realization).
    pub fn eval_on(&self, u: &[Jet2]) -> Jet2 {
        assert_eq!(u.len(), self.dim);
        (self.f)(u)
    }
}

/// First order generator applied to the field:
/// `u^nu d^mu f - u^mu d^nu f`.
pub fn generator_apply(sig: Signature, field: &ScalarField, u: &[f64], mu: usize, nu: usize) -> f64 {
    let jet = field.jet_at(u);
    u[nu] * sig.eta(mu) * jet.grad(mu) - u[mu] * sig.eta(nu) * jet.grad(nu)
}

/// Generator applied to a field jet, returning the value together with the
/// full gradient of the result.  The gradient of a first order application
/// only needs the Hessian of `f`, which the jet already carries.
fn generator_with_grad(
    sig: Signature,
    jet: &Jet2,
    u: &[f64],
    mu: usize,
    nu: usize,
) -> (f64, Vec<f64>) {
    let d = u.len();
    let (emu, enu) = (sig.eta(mu), sig.eta(nu));
    let value = u[nu] * emu * jet.grad(mu) - u[mu] * enu * jet.grad(nu);
    let mut grad = vec![0.0; d];
    for c in 0..d {
        let mut g = u[nu] * emu * jet.hess(mu, c) - u[mu] * enu * jet.hess(nu, c);
        if c == nu {
            g += emu * jet.grad(mu);
        }
        if c == mu {
            g -= enu * jet.grad(nu);
        }
        grad[c] = g;
    }
    (value, grad)
}

/// Nested double application `R^{mn} (R^{ab} f)` at `u`.
pub fn generator_twice(
    sig: Signature,
    field: &ScalarField,
    u: &[f64],
    outer: (usize, usize),
    inner: (usize, usize),
) -> f64 {
    let jet = field.jet_at(u);
    let (_, grad_inner) = generator_with_grad(sig, &jet, u, inner.0, inner.1);
    let (mu, nu) = outer;
    u[nu] * sig.eta(mu) * grad_inner[mu] - u[mu] * sig.eta(nu) * grad_inner[nu]
}

/// Residual of the generator algebra
/// `[R^{mn}, R^{ab}] - (eta^{ma} R^{nb} + eta^{nb} R^{ma} - eta^{na} R^{mb}
/// - eta^{mb} R^{na})` applied to the field at `u`.
pub fn commutator_residual(
    sig: Signature,
    field: &ScalarField,
    u: &[f64],
    first: (usize, usize),
    second: (usize, usize),
) -> f64 {
    let (m, n) = first;
    let (a, b) = second;
    let lhs = generator_twice(sig, field, u, first, second)
        - generator_twice(sig, field, u, second, first);
    let mut rhs = 0.0;
    if m == a {
        rhs += sig.eta(m) * generator_apply(sig, field, u, n, b);
    }
    if n == b {
        rhs += sig.eta(n) * generator_apply(sig, field, u, m, a);
    }
    if n == a {
        rhs -= sig.eta(n) * generator_apply(sig, field, u, m, b);
    }
    if m == b {
        rhs -= sig.eta(m) * generator_apply(sig, field, u, n, a);
    }
    lhs - rhs
}

/// Wave operator `eta^{mu mu} d_mu d_mu f` (diagonal metric).
pub fn box_operator(sig: Signature, field: &ScalarField, u: &[f64]) -> f64 {
    let jet = field.jet_at(u);
    (0..u.len()).map(|m| sig.eta(m) * jet.hess(m, m)).sum()
}

/// Closed Cartesian realization:
/// `(u.u) box f - (D - 1) u.grad f - u^m u^n H_{mn} f`
/// with plain (unweighted) sums in the last two terms.
pub fn laplace_cartesian(sig: Signature, field: &ScalarField, u: &[f64]) -> f64 {
    let d = u.len();
    let jet = field.jet_at(u);
    let uu: f64 = (0..d).map(|m| sig.eta(m) * u[m] * u[m]).sum();
    let boxf: f64 = (0..d).map(|m| sig.eta(m) * jet.hess(m, m)).sum();
    let udg: f64 = (0..d).map(|m| u[m] * jet.grad(m)).sum();
    let huu: f64 = (0..d)
        .map(|m| (0..d).map(|n| u[m] * u[n] * jet.hess(m, n)).sum::<f64>())
        .sum();
    uu * boxf - (d as f64 - 1.0) * udg - huu
}

/// Oracle realization: half the metric-weighted sum of squared generators,
/// each square taken by honest nested application.
pub fn laplace_generator_sum(sig: Signature, field: &ScalarField, u: &[f64]) -> f64 {
    let d = u.len();
    let jet = field.jet_at(u);
    let mut acc = 0.0;
    for a in 0..d {
        for b in (a + 1)..d {
            let (_, grad) = generator_with_grad(sig, &jet, u, a, b);
            let square = u[b] * sig.eta(a) * grad[a] - u[a] * sig.eta(b) * grad[b];
            acc += sig.eta(a) * sig.eta(b) * square;
        }
    }
    acc
}

/// Residual of the splitting of the wave operator into the invariant
/// operator plus radial terms, with the invariant part taken from the
/// generator-sum oracle so the check does not collapse to an identity.
pub fn box_split_residual(sig: Signature, field: &ScalarField, u: &[f64]) -> f64 {
    let d = u.len();
    let jet = field.jet_at(u);
    let uu: f64 = (0..d).map(|m| sig.eta(m) * u[m] * u[m]).sum();
    let boxf = box_operator(sig, field, u);
    let udg: f64 = (0..d).map(|m| u[m] * jet.grad(m)).sum();
    let huu: f64 = (0..d)
        .map(|m| (0..d).map(|n| u[m] * u[n] * jet.hess(m, n)).sum::<f64>())
        .sum();
    let lb = laplace_generator_sum(sig, field, u);
    uu * boxf - (lb + (d as f64 - 1.0) * udg + huu)
}

const SINGULAR_EPS: f64 = 1e-10;
const RADIAL_EPS: f64 = 1e-8;

#[derive(Debug, Error, PartialEq)]
pub enum LbError {
    #[error("field varies with the radius (dF/dr = {dfdr}); the chart realization needs homogeneous degree zero")]
    RadialDependence { dfdr: f64 },
    #[error("chart singular here: the angle product multiplying angle {n} vanishes")]
    SingularChart { n: usize },
}

/// Chart realization applied to a function of the angles alone:
/// `sum_n (sigma_n / P_n^2) [ (D-1-n) S_n S_n' dF/dtheta_n
/// + S_n^2 d2F/dtheta_n^2 ]` with `sigma_1 = eta00` and `sigma_n = s`
/// otherwise.
pub fn laplace_on_sphere(
    domain: Domain,
    f: &dyn Fn(&[Jet2]) -> Jet2,
    angles: &[f64],
) -> Result<f64, LbError> {
    let d = angles.len() + 1;
    let jets = Jet2::vars(angles);
    let fj = f(&jets);
    let cache = TrigCache::<f64>::new(domain, angles);
    let eta00 = domain.signature().eta00();
    let s = domain.s();
    let mut acc = 0.0;
    for n in 1..d {
        let sigma = if n == 1 { eta00 } else { s };
        let (g1, g2) = (fj.grad(n - 1), fj.hess(n - 1, n - 1));
        if n == d - 1 {
            // The closing factor pair is (1, 0), so S_n^2 / P_n^2 reduces
            // exactly to 1 / P_{n-1}^2 and the first order term drops out.
            let pprev = cache.p[n - 1];
            if n > 1 && pprev.abs() < SINGULAR_EPS {
                return Err(LbError::SingularChart { n });
            }
            acc += sigma * g2 / (pprev * pprev);
        } else {
            let pn = cache.p[n];
            if pn.abs() < SINGULAR_EPS {
                return Err(LbError::SingularChart { n });
            }
            let sn = cache.s[n - 1];
            let dsn = cache.dpair(domain, n).1;
            acc += sigma * ((d - 1 - n) as f64 * sn * dsn * g1 + sn * sn * g2) / (pn * pn);
        }
    }
    Ok(acc)
}

/// Chart realization for a Cartesian field at a chart point.  Rejects fields
/// that vary with the radius, then works entirely in the angles.
pub fn laplace_spherical(
    field: &ScalarField,
    domain: Domain,
    point: &SphericalPoint,
) -> Result<f64, LbError> {
    let d = point.dim();
    assert_eq!(d, field.dim());
    // Radial screen: seed (r, angles) jointly and look at dF/dr.
    let mut vars = vec![point.r];
    vars.extend(&point.angles);
    let jets = Jet2::vars(&vars);
    let u = to_cartesian(domain, &jets[0], &jets[1..]);
    let full = field.eval_on(&u);
    let dfdr = full.grad(0);
    if dfdr.abs() > RADIAL_EPS * (1.0 + full.v.abs()) {
        return Err(LbError::RadialDependence { dfdr });
    }
    let r = point.r;
    laplace_on_sphere(
        domain,
        &|aj: &[Jet2]| {
            let rj = aj[0].konst(r);
            field.eval_on(&to_cartesian(domain, &rj, aj))
        },
        &point.angles,
    )
}
