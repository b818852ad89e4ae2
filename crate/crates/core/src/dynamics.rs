//! Constrained dynamics of a complexified trajectory with a complex lapse.
//!
//! The model couples a complex curve `z(tau)` in flat space to a complex
//! lapse `g(tau)` through the real Lagrangian
//!
//! ```text
//!     L = Re( w.w / g ) - 2 kappa Im( w.zbar ),        w = dz/dtau,
//! ```
//!
//! all dots taken with the flat metric.  Its equation of motion is
//!
//! ```text
//!     dw/dtau = (gdot / g) w - 2 i kappa g wbar,
//! ```
//!
//! and varying the lapse enforces the bilinear constraint `w.w = 0`, whose
//! conjugate pair combines with the sesquilinear `w.wbar = 0` on initial
//! data built from a real lightlike direction.  The module integrates the
//! motion, monitors the quantities that the equations promise to conserve
//! (a linear momentum, both constraints, a first integral expressing the
//! velocity through the position), evaluates a closed-form solution for a
//! constant lapse, and checks the off-shell identity that exchanges the
//! Lagrangian's gauge variation for constraint multiples plus a total
//! derivative — the bookkeeping behind the conserved gauge charge.

use num_complex::Complex64;
use thiserror::Error;

use crate::metric::{cdot, cdot_conj, Signature};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Fixed data of one model instance.
#[derive(Clone, Copy, Debug)]
pub struct Params {
    pub sig: Signature,
    /// Coupling of the velocity to the conjugate position.
    pub kappa: f64,
}

/// Time-dependent complex lapse profiles with analytic slopes.
#[derive(Clone, Copy, Debug)]
pub enum Einbein {
    Constant { g: Complex64 },
    /// `g(tau) = base (1 + amp sin(freq tau))`; keep `|amp| < 1` so the
    /// lapse never crosses zero.
    Wobble { base: Complex64, amp: f64, freq: f64 },
}

impl Einbein {
    pub fn value(&self, tau: f64) -> Complex64 {
        match *self {
            Einbein::Constant { g } => g,
            Einbein::Wobble { base, amp, freq } => base * (1.0 + amp * (freq * tau).sin()),
        }
    }

    pub fn slope(&self, tau: f64) -> Complex64 {
        match *self {
            Einbein::Constant { .. } => Complex64::new(0.0, 0.0),
            Einbein::Wobble { base, amp, freq } => base * amp * freq * (freq * tau).cos(),
        }
    }
}

/// One point of an integrated trajectory.
#[derive(Clone, Debug)]
pub struct State {
    pub tau: f64,
    pub z: Vec<Complex64>,
    pub w: Vec<Complex64>,
}

#[derive(Debug, Error)]
pub enum DynamicsError {
    #[error("position and velocity must have equal nonzero length, got {z} and {w}")]
    MismatchedState { z: usize, w: usize },
    #[error("step size must be positive and finite, got {0}")]
    BadStep(f64),
}

/// Right-hand side of the equation of motion for the velocity.
fn acceleration(
    params: &Params,
    g: Complex64,
    gdot: Complex64,
    w: &[Complex64],
) -> Vec<Complex64> {
    let ratio = gdot / g;
    let twist = 2.0 * params.kappa * I * g;
    w.iter().map(|wi| ratio * wi - twist * wi.conj()).collect()
}

/// Integrate the motion with a classical fourth-order scheme at fixed step.
///
/// Returns the trajectory sampled at every step, starting with the initial
/// state at `tau = 0` and ending at the first grid point at or past
/// `tau_end`.
pub fn integrate_trajectory(
    params: &Params,
    lapse: &Einbein,
    z0: &[Complex64],
    w0: &[Complex64],
    tau_end: f64,
    dt: f64,
) -> Result<Vec<State>, DynamicsError> {
    if z0.is_empty() || z0.len() != w0.len() {
        return Err(DynamicsError::MismatchedState { z: z0.len(), w: w0.len() });
    }
    if !(dt.is_finite() && dt > 0.0) {
        return Err(DynamicsError::BadStep(dt));
    }
    let mut states = Vec::with_capacity((tau_end / dt).ceil() as usize + 1);
    let mut z = z0.to_vec();
    let mut w = w0.to_vec();
    let mut tau = 0.0;
    states.push(State { tau, z: z.clone(), w: w.clone() });
    let shift = |base: &[Complex64], dir: &[Complex64], h: f64| -> Vec<Complex64> {
        base.iter().zip(dir).map(|(a, k)| a + h * k).collect()
    };
    while tau < tau_end - 1e-12 {
        let acc = |t: f64, ws: &[Complex64]| {
            acceleration(params, lapse.value(t), lapse.slope(t), ws)
        };
        let k1z = w.clone();
        let k1w = acc(tau, &w);
        let k2z = shift(&w, &k1w, 0.5 * dt);
        let k2w = acc(tau + 0.5 * dt, &k2z);
        let k3z = shift(&w, &k2w, 0.5 * dt);
        let k3w = acc(tau + 0.5 * dt, &k3z);
        let k4z = shift(&w, &k3w, dt);
        let k4w = acc(tau + dt, &k4z);
        for i in 0..z.len() {
            z[i] += dt / 6.0 * (k1z[i] + 2.0 * k2z[i] + 2.0 * k3z[i] + k4z[i]);
            w[i] += dt / 6.0 * (k1w[i] + 2.0 * k2w[i] + 2.0 * k3w[i] + k4w[i]);
        }
        tau += dt;
        states.push(State { tau, z: z.clone(), w: w.clone() });
    }
    Ok(states)
}

/// Bilinear constraint `w.w` (complex).
pub fn bilinear_constraint(sig: Signature, w: &[Complex64]) -> Complex64 {
    cdot(sig, w, w)
}

/// Sesquilinear constraint `w.wbar` (real up to rounding).
pub fn sesquilinear_constraint(sig: Signature, w: &[Complex64]) -> f64 {
    cdot_conj(sig, w, w).re
}

/// Momentum `p = w/g + 2 i kappa zbar`, conserved along the motion.
pub fn momentum(kappa: f64, g: Complex64, z: &[Complex64], w: &[Complex64]) -> Vec<Complex64> {
    z.iter()
        .zip(w)
        .map(|(zi, wi)| wi / g + 2.0 * kappa * I * zi.conj())
        .collect()
}

/// Residual of the first integral `w + 2 i kappa g (zbar - Cbar) = 0`,
/// with `C` fixed by the initial data as `z(0) + i wbar(0) / (2 kappa gbar(0))`.
pub fn first_integral_residual(
    kappa: f64,
    g: Complex64,
    z: &[Complex64],
    w: &[Complex64],
    c: &[Complex64],
) -> f64 {
    z.iter()
        .zip(w)
        .zip(c)
        .map(|((zi, wi), ci)| (wi + 2.0 * kappa * I * g * (zi.conj() - ci.conj())).norm())
        .fold(0.0, f64::max)
}

/// The constant `C` of the first integral from initial data.
pub fn first_integral_center(
    kappa: f64,
    g0: Complex64,
    z0: &[Complex64],
    w0: &[Complex64],
) -> Vec<Complex64> {
    z0.iter()
        .zip(w0)
        .map(|(zi, wi)| zi + I * wi.conj() / (2.0 * kappa * g0.conj()))
        .collect()
}

/// The Lagrangian value at one phase point.
pub fn lagrangian(params: &Params, g: Complex64, z: &[Complex64], w: &[Complex64]) -> f64 {
    let kin = (cdot(params.sig, w, w) / g).re;
    let coupling = cdot_conj(params.sig, w, z).im;
    kin - 2.0 * params.kappa * coupling
}

/// Kinetic term rewritten over the real and imaginary parts of `w` and `g`.
///
/// With `w = u + i f` and `g = g1 + i g2` the kinetic piece of the
/// Lagrangian is algebraically
///
/// ```text
///     Re(w.w / g) = [ g1 (u.u - f.f) + 2 g2 u.f ] / (g1^2 + g2^2),
/// ```
///
/// an independent route used to cross-check the complex evaluation.
pub fn kinetic_split(sig: Signature, g: Complex64, w: &[Complex64]) -> f64 {
    let u: Vec<f64> = w.iter().map(|c| c.re).collect();
    let f: Vec<f64> = w.iter().map(|c| c.im).collect();
    let uu = crate::metric::dot(sig, &u, &u);
    let ff = crate::metric::dot(sig, &f, &f);
    let uf = crate::metric::dot(sig, &u, &f);
    (g.re * (uu - ff) + 2.0 * g.im * uf) / (g.re * g.re + g.im * g.im)
}

/// Initial velocity `(1 + i alpha) u0` from a real lightlike direction.
///
/// Both constraints vanish on such data because `u0.u0 = 0` factors out of
/// each, and the equations of motion then keep them zero.
pub fn doubly_constrained_velocity(alpha: f64, u0: &[f64]) -> Vec<Complex64> {
    u0.iter().map(|&x| Complex64::new(x, alpha * x)).collect()
}

/// Residuals of the two velocity conditions on the indefinite metric.
///
/// Writing `v^i = w^i / w^0`, the bilinear constraint forces the complex
/// bilinear sum `sum (v^i)^2` to one and the sesquilinear constraint
/// forces `sum |v^i|^2` to one; returns both differences.
pub fn velocity_condition_residuals(w: &[Complex64]) -> (Complex64, f64) {
    let w0 = w[0];
    let mut bilinear = Complex64::new(0.0, 0.0);
    let mut absolute = 0.0;
    for wi in &w[1..] {
        let v = wi / w0;
        bilinear += v * v;
        absolute += v.norm_sqr();
    }
    (bilinear - 1.0, absolute - 1.0)
}

/// Closed-form solution for a constant lapse.
///
/// With `mu = 2 kappa |g|` and `gamma = arg g`, the curve
///
/// ```text
///     z = C + exp(i(gamma/2 - pi/4)) a exp(mu tau)
///           + exp(i(gamma/2 + pi/4)) b exp(-mu tau)
/// ```
///
/// solves the equation of motion for any real vectors `a`, `b` and any
/// complex center `C`: one real direction inflates, the orthogonal phase
/// deflates, at the rate set by the lapse modulus.
pub fn closed_form_state(
    kappa: f64,
    g: Complex64,
    center: &[Complex64],
    a: &[f64],
    b: &[f64],
    tau: f64,
) -> State {
    let mu = 2.0 * kappa * g.norm();
    let gamma = g.arg();
    let grow = Complex64::from_polar(1.0, gamma / 2.0 - std::f64::consts::FRAC_PI_4)
        * (mu * tau).exp();
    let decay = Complex64::from_polar(1.0, gamma / 2.0 + std::f64::consts::FRAC_PI_4)
        * (-mu * tau).exp();
    let z: Vec<Complex64> = center
        .iter()
        .zip(a.iter().zip(b))
        .map(|(c, (&ai, &bi))| c + grow * ai + decay * bi)
        .collect();
    let w: Vec<Complex64> = a
        .iter()
        .zip(b)
        .map(|(&ai, &bi)| mu * (grow * ai - decay * bi))
        .collect();
    State { tau, z, w }
}

/// Complex polynomial in a real variable, constant coefficient first.
///
/// Off-shell checks run over polynomial curves because their derivatives
/// are exact, so no differencing error enters an identity that must hold
/// to rounding.
#[derive(Clone, Debug)]
pub struct Poly(pub Vec<Complex64>);

impl Poly {
    pub fn real(coeffs: &[f64]) -> Self {
        Poly(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn eval(&self, t: f64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.0.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn deriv(&self) -> Poly {
        Poly(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * k as f64)
                .collect(),
        )
    }
}

/// Off-shell gauge data: an arbitrary polynomial history of the curve and
/// lapse together with polynomial transformation parameters.
#[derive(Clone, Debug)]
pub struct GaugeData {
    /// Components of the curve `z(tau)`.
    pub z: Vec<Poly>,
    /// Lapse history `g(tau)`; keep it away from zero on the window used.
    pub g: Poly,
    /// Complex reparametrization parameter `eps(tau)`.
    pub eps: Poly,
    /// Real mixing parameter `eps0(tau)` (real coefficients).
    pub eps0: Poly,
    /// Lapse shift `xi(tau)`.
    pub xi: Poly,
}

/// Both sides of the off-shell variation identity at one instant.
///
/// The gauge transformation `dz = eps w + (eps0 / gbar) wbar`, `dg = xi`
/// changes the Lagrangian by constraint multiples plus a total derivative:
///
/// ```text
///     dL = 2 Re{ (l0 / 2 g gbar) [eps0' - 2 i kappa g gbar (eps - epsbar)]
///                + A l + dE/dtau },
///     A  = [ (eps g)' + 4 i kappa g eps0 - xi ] / (2 g^2),
///     E  = (w / 2g + i kappa zbar) . dz,
/// ```
///
/// with `l = w.w` and `l0 = w.wbar`.  The left side is assembled from the
/// raw partial derivatives of `L`, the right side from the display above;
/// the two must agree for every curve, not just solutions.
pub fn gauge_identity_sides(params: &Params, data: &GaugeData, tau: f64) -> (f64, f64) {
    let sig = params.sig;
    let kappa = params.kappa;
    let z: Vec<Complex64> = data.z.iter().map(|p| p.eval(tau)).collect();
    let w: Vec<Complex64> = data.z.iter().map(|p| p.deriv().eval(tau)).collect();
    let wd: Vec<Complex64> = data.z.iter().map(|p| p.deriv().deriv().eval(tau)).collect();
    let g = data.g.eval(tau);
    let gd = data.g.deriv().eval(tau);
    let eps = data.eps.eval(tau);
    let epsd = data.eps.deriv().eval(tau);
    let eps0 = data.eps0.eval(tau);
    let eps0d = data.eps0.deriv().eval(tau);
    let xi = data.xi.eval(tau);

    let zbar: Vec<Complex64> = z.iter().map(|c| c.conj()).collect();
    let wbar: Vec<Complex64> = w.iter().map(|c| c.conj()).collect();
    let beta = eps0 / g.conj();
    let betad = eps0d / g.conj() - eps0 * gd.conj() / (g.conj() * g.conj());

    let dz: Vec<Complex64> = w.iter().zip(&wbar).map(|(wi, wb)| eps * wi + beta * wb).collect();
    let dw: Vec<Complex64> = (0..w.len())
        .map(|i| epsd * w[i] + eps * wd[i] + betad * wbar[i] + beta * wd[i].conj())
        .collect();
    let dzbar: Vec<Complex64> = dz.iter().map(|c| c.conj()).collect();

    // Left side: first-order change of L under (dz, dw, dg = xi).
    let hol = cdot(sig, &w, &dw) / g - cdot(sig, &w, &w) / (2.0 * g * g) * xi
        + kappa * I * (cdot(sig, &dw, &zbar) + cdot(sig, &w, &dzbar));
    let lhs = 2.0 * hol.re;

    // Right side: constraint multiples plus the exact time derivative of E.
    let l = cdot(sig, &w, &w);
    let l0 = cdot_conj(sig, &w, &w);
    let a_coeff = ((epsd * g + eps * gd) + 4.0 * kappa * I * g * eps0 - xi) / (2.0 * g * g);
    let mixing = l0 / (2.0 * g * g.conj())
        * (eps0d - 2.0 * kappa * I * g * g.conj() * (eps - eps.conj()));
    let de = {
        let lead: Vec<Complex64> = (0..w.len())
            .map(|i| wd[i] / (2.0 * g) - w[i] * gd / (2.0 * g * g) + kappa * I * wbar[i])
            .collect();
        let coef: Vec<Complex64> = (0..w.len())
            .map(|i| w[i] / (2.0 * g) + kappa * I * zbar[i])
            .collect();
        cdot(sig, &lead, &dz) + cdot(sig, &coef, &dw)
    };
    let rhs = 2.0 * (mixing + a_coeff * l + de).re;
    (lhs, rhs)
}

/// Conserved charge generated by the constant mixing transformation.
///
/// On a solution the boundary bookkeeping of the variation identity leaves
/// `Q = l0 / (g gbar) + c.c.`; it vanishes identically on the constraint
/// surface and is the on-shell face of the sesquilinear constraint.
pub fn gauge_charge(sig: Signature, g: Complex64, w: &[Complex64]) -> f64 {
    let l0 = cdot_conj(sig, w, w);
    2.0 * (l0 / (g * g.conj())).re
}

/// The same charge as published elsewhere with the opposite overall sign.
///
/// The two appearances differ by orientation of the transformation; their
/// relation is pinned here so the flip stays visible.
pub fn gauge_charge_flipped(sig: Signature, g: Complex64, w: &[Complex64]) -> f64 {
    -gauge_charge(sig, g, w)
}

/// Render a trajectory as CSV with complex components split into parts.
pub fn trajectory_csv(sig: Signature, states: &[State]) -> String {
    let mut out = String::new();
    if states.is_empty() {
        return out;
    }
    let dim = states[0].z.len();
    out.push_str("tau");
    for i in 0..dim {
        out.push_str(&format!(",re_z{i},im_z{i}"));
    }
    out.push_str(",abs_bilinear,abs_sesquilinear\n");
    for st in states {
        out.push_str(&format!("{:.6}", st.tau));
        for zi in &st.z {
            out.push_str(&format!(",{:.12},{:.12}", zi.re, zi.im));
        }
        let l = bilinear_constraint(sig, &st.w).norm();
        let l0 = sesquilinear_constraint(sig, &st.w).abs();
        out.push_str(&format!(",{l:.3e},{l0:.3e}\n"));
    }
    out
}
