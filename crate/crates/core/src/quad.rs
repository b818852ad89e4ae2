//! Small adaptive quadrature used by the second-kind angular factors, plus
//! a helper that promotes an antiderivative to a second order jet.

use crate::jet::Jet2;

fn simpson(fa: f64, fm: f64, fb: f64, h: f64) -> f64 {
    h / 6.0 * (fa + 4.0 * fm + fb)
}

fn adapt(
    f: &dyn Fn(f64) -> f64,
    a: f64,
    m: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(fa, flm, fm, m - a);
    let right = simpson(fm, frm, fb, b - m);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        // Richardson tail of the classic adaptive Simpson scheme.
        left + right + delta / 15.0
    } else {
        adapt(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
            + adapt(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
    }
}

/// Adaptive Simpson integral of `f` over `[a, b]` (signed; `a > b` flips the
/// sign) with absolute tolerance `tol`.
pub fn integrate(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    if a > b {
        return -integrate(f, b, a, tol);
    }
    let m = 0.5 * (a + b);
    let (fa, fm, fb) = (f(a), f(m), f(b));
    let whole = simpson(fa, fm, fb, b - a);
    adapt(f, a, m, b, fa, fm, fb, whole, tol.max(1e-15), 28)
}

/// Antiderivative `x -> integral of f from x0 to x` evaluated on a jet
/// endpoint: the value comes from quadrature, the derivatives are exact
/// evaluations of the integrand and its derivative.
pub fn antiderivative_jet(
    f: &dyn Fn(f64) -> f64,
    df: &dyn Fn(f64) -> f64,
    x0: f64,
    x: &Jet2,
    tol: f64,
) -> Jet2 {
    let value = integrate(f, x0, x.v, tol);
    x.compose(value, f(x.v), df(x.v))
}
