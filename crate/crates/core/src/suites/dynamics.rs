//! Trajectory integration, conserved quantities, and gauge identities.
//!
//! One doubly constrained run checks that both velocity constraints and
//! the momentum stay pinned over a full unit of evolution time; a second
//! run with a constant lapse pits the integrator against the closed-form
//! solution.  Off-shell records verify the variation identity on random
//! polynomial histories, where every derivative is exact.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::signature_label;
use crate::dynamics::{
    bilinear_constraint, closed_form_state, doubly_constrained_velocity, first_integral_center,
    first_integral_residual, gauge_charge, gauge_charge_flipped, gauge_identity_sides,
    integrate_trajectory, kinetic_split, momentum, sesquilinear_constraint,
    velocity_condition_residuals, Einbein, GaugeData, Params, Poly,
};
use crate::metric::{cdot, scaled_err, Signature};
use crate::report::{Record, Suite};

const STEP: f64 = 1e-3;
const DRIFT_TOL: f64 = 1e-8;
const VELOCITY_TOL: f64 = 1e-6;
const GAUGE_TOL: f64 = 1e-7;

pub fn suite(seed: u64) -> Suite {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xD14A_77E5);
    let mut out = Suite::new("dynamics");
    constrained_run(&mut rng, &mut out);
    closed_form_run(&mut rng, &mut out);
    velocity_records(&mut rng, &mut out);
    gauge_records(&mut rng, &mut out);
    kinetic_records(&mut rng, &mut out);
    out
}

fn c_range(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> Complex64 {
    Complex64::new(rng.random_range(lo..hi), rng.random_range(lo..hi))
}

/// A real lightlike direction with positive time component.
fn lightlike(rng: &mut ChaCha8Rng) -> Vec<f64> {
    loop {
        let n: [f64; 3] = [
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
        ];
        let norm = (n[0] * n[0] + n[1] * n[1] + n[2] * n[2]).sqrt();
        if norm < 0.3 {
            continue;
        }
        let r = rng.random_range(0.5..1.5);
        return vec![r, r * n[0] / norm, r * n[1] / norm, r * n[2] / norm];
    }
}

/// Both constraints start at zero and must stay there, along with the
/// momentum and the first integral, over a full unit of evolution.
fn constrained_run(rng: &mut ChaCha8Rng, out: &mut Suite) {
    let params = Params { sig: Signature::Minkowski, kappa: 0.8 };
    let lapse = Einbein::Wobble {
        base: Complex64::new(0.9, 0.35),
        amp: 0.3,
        freq: 2.0,
    };
    let u0 = lightlike(rng);
    let w0 = doubly_constrained_velocity(0.7, &u0);
    let z0: Vec<Complex64> = (0..4).map(|_| c_range(rng, -1.0, 1.0)).collect();
    let states = integrate_trajectory(&params, &lapse, &z0, &w0, 1.0, STEP)
        .expect("well-formed initial state");

    let p0 = momentum(params.kappa, lapse.value(0.0), &z0, &w0);
    let center = first_integral_center(params.kappa, lapse.value(0.0), &z0, &w0);
    let mut bilinear_max: f64 = 0.0;
    let mut sesqui_max: f64 = 0.0;
    let mut momentum_max: f64 = 0.0;
    let mut integral_max: f64 = 0.0;
    let mut charge_max: f64 = 0.0;
    for st in &states {
        let g = lapse.value(st.tau);
        bilinear_max = bilinear_max.max(bilinear_constraint(params.sig, &st.w).norm());
        sesqui_max = sesqui_max.max(sesquilinear_constraint(params.sig, &st.w).abs());
        let p = momentum(params.kappa, g, &st.z, &st.w);
        for (a, b) in p.iter().zip(&p0) {
            momentum_max = momentum_max.max((a - b).norm());
        }
        integral_max = integral_max
            .max(first_integral_residual(params.kappa, g, &st.z, &st.w, &center));
        charge_max = charge_max.max(gauge_charge(params.sig, g, &st.w).abs());
    }
    let steps = states.len() as i64 - 1;
    out.push(
        Record::vanishes("drift/bilinear", bilinear_max, DRIFT_TOL).input("steps", steps),
    );
    out.push(
        Record::vanishes("drift/sesquilinear", sesqui_max, DRIFT_TOL).input("steps", steps),
    );
    out.push(
        Record::vanishes("drift/momentum", momentum_max, DRIFT_TOL)
            .eq("2.26")
            .input("steps", steps),
    );
    out.push(
        Record::vanishes("drift/first-integral", integral_max, DRIFT_TOL).input("steps", steps),
    );
    out.push(Record::vanishes("charge/on-shell", charge_max, DRIFT_TOL).eq("2.25"));

    // The flipped convention is the exact negation, checked at the start.
    let q = gauge_charge(params.sig, lapse.value(0.0), &w0);
    let flipped = gauge_charge_flipped(params.sig, lapse.value(0.0), &w0);
    out.push(Record::vanishes("charge/flip", (q + flipped).abs(), 1e-15));
}

/// Constant-lapse evolution against the exact inflating/deflating curve.
fn closed_form_run(rng: &mut ChaCha8Rng, out: &mut Suite) {
    let kappa = 0.8;
    let g = Complex64::new(0.75, 0.4);
    let params = Params { sig: Signature::Minkowski, kappa };
    let lapse = Einbein::Constant { g };
    let center: Vec<Complex64> = (0..4).map(|_| c_range(rng, -1.0, 1.0)).collect();
    let a: Vec<f64> = (0..4).map(|_| rng.random_range(-0.6..0.6)).collect();
    let b: Vec<f64> = (0..4).map(|_| rng.random_range(-0.6..0.6)).collect();
    let start = closed_form_state(kappa, g, &center, &a, &b, 0.0);
    let states = integrate_trajectory(&params, &lapse, &start.z, &start.w, 1.0, STEP)
        .expect("well-formed initial state");
    let last = states.last().expect("nonempty trajectory");
    let exact = closed_form_state(kappa, g, &center, &a, &b, last.tau);
    let mut worst: f64 = 0.0;
    for i in 0..4 {
        worst = worst
            .max(scaled_err(exact.z[i].re, last.z[i].re))
            .max(scaled_err(exact.z[i].im, last.z[i].im))
            .max(scaled_err(exact.w[i].re, last.w[i].re))
            .max(scaled_err(exact.w[i].im, last.w[i].im));
    }
    out.push(
        Record::vanishes("closed-form/final", worst, DRIFT_TOL)
            .input("tau", last.tau)
            .input("rate", 2.0 * kappa * g.norm()),
    );
}

/// Normalized velocity conditions on random admissible initial states.
fn velocity_records(rng: &mut ChaCha8Rng, out: &mut Suite) {
    let mut worst: f64 = 0.0;
    for _ in 0..20 {
        let u0 = lightlike(rng);
        let alpha = rng.random_range(-1.5..1.5);
        let scale = c_range(rng, -1.0, 1.0) + Complex64::new(1.5, 0.0);
        let w: Vec<Complex64> = doubly_constrained_velocity(alpha, &u0)
            .into_iter()
            .map(|wi| scale * wi)
            .collect();
        let (bilinear, absolute) = velocity_condition_residuals(&w);
        worst = worst.max(bilinear.norm()).max(absolute.abs());
    }
    out.push(
        Record::vanishes("velocity-conditions", worst, VELOCITY_TOL)
            .eq("2.16")
            .input("states", 20),
    );
}

fn random_poly(rng: &mut ChaCha8Rng, len: usize, span: f64) -> Poly {
    Poly((0..len).map(|_| c_range(rng, -span, span)).collect())
}

/// Off-shell variation identity on random polynomial histories.
fn gauge_records(rng: &mut ChaCha8Rng, out: &mut Suite) {
    for sig in [Signature::Euclid, Signature::Minkowski] {
        let mut worst: f64 = 0.0;
        for _ in 0..10 {
            let params = Params { sig, kappa: rng.random_range(0.4..1.2) };
            let data = GaugeData {
                z: (0..3).map(|_| random_poly(rng, 4, 0.5)).collect(),
                g: {
                    let mut g = random_poly(rng, 3, 0.1);
                    g.0[0] += Complex64::new(1.1, 0.5);
                    g
                },
                eps: random_poly(rng, 3, 0.5),
                eps0: Poly::real(&[
                    rng.random_range(-0.5..0.5),
                    rng.random_range(-0.5..0.5),
                    rng.random_range(-0.5..0.5),
                ]),
                xi: random_poly(rng, 3, 0.5),
            };
            for k in 0..=10 {
                let tau = -0.5 + 0.1 * k as f64;
                let (lhs, rhs) = gauge_identity_sides(&params, &data, tau);
                worst = worst.max(scaled_err(lhs, rhs));
            }
        }
        out.push(
            Record::vanishes(format!("gauge-identity/{}", signature_label(sig)), worst, GAUGE_TOL)
                .eq("A.2")
                .input("histories", 10),
        );
    }
}

/// The kinetic term evaluated over real parts against the complex route.
fn kinetic_records(rng: &mut ChaCha8Rng, out: &mut Suite) {
    let mut worst: f64 = 0.0;
    for k in 0..20 {
        let sig = if k % 2 == 0 { Signature::Euclid } else { Signature::Minkowski };
        let g = c_range(rng, -1.0, 1.0) + Complex64::new(1.5, 0.0);
        let w: Vec<Complex64> = (0..4).map(|_| c_range(rng, -1.0, 1.0)).collect();
        let complex_route = (cdot(sig, &w, &w) / g).re;
        let split_route = kinetic_split(sig, g, &w);
        worst = worst.max(scaled_err(complex_route, split_route));
    }
    out.push(Record::vanishes("kinetic-split", worst, 1e-12).eq("2.17").input("draws", 20));
}
