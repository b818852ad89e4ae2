//! Seeded sampling of chart points and the shared battery of test fields.
//!
//! Chart samples stay away from coordinate singularities by fixed
//! margins: polar angles keep clear of their endpoints, rapidities on
//! the two-sheet domains keep clear of zero, and the closing angle
//! avoids the wrap point.  The field battery is a fixed list of smooth
//! degree-zero functions — each normalizes its argument onto the unit
//! quadric first — shared by every operator-agreement check.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::coords::{Domain, SphericalPoint};
use crate::jet::{Jet2, Real};
use crate::lbop::ScalarField;

/// Radial window for chart samples.
pub const RADIUS_RANGE: (f64, f64) = (0.4, 2.2);
/// Margin kept from the endpoints of polar angles.
pub const POLAR_MARGIN: f64 = 0.15;
/// Margin kept from the wrap point of the closing angle.
pub const CLOSING_MARGIN: f64 = 0.05;
/// Rapidity window on the two-sheet domains.
pub const RAPIDITY_RANGE: (f64, f64) = (0.2, 2.5);
/// Rapidity bound on the one-sheet domain.
pub const SPREAD_BOUND: f64 = 2.5;

/// Draw chart angles for a point in `dim` dimensions, respecting the
/// singularity margins of the domain.
pub fn sample_angles(rng: &mut ChaCha8Rng, domain: Domain, dim: usize) -> Vec<f64> {
    assert!(dim >= 2);
    let count = dim - 1;
    let mut angles = Vec::with_capacity(count);
    for idx in 0..count {
        let is_first = idx == 0;
        let is_last = idx == count - 1;
        let value = if is_first {
            match domain {
                Domain::Euclid => {
                    if is_last {
                        // Plane case: the only angle winds the full circle.
                        rng.random_range(CLOSING_MARGIN..std::f64::consts::TAU - CLOSING_MARGIN)
                    } else {
                        rng.random_range(POLAR_MARGIN..std::f64::consts::PI - POLAR_MARGIN)
                    }
                }
                Domain::TimelikeUpper | Domain::TimelikeLower => {
                    let t = rng.random_range(RAPIDITY_RANGE.0..RAPIDITY_RANGE.1);
                    if dim == 2 && rng.random_range(0..2) == 1 {
                        -t
                    } else {
                        t
                    }
                }
                Domain::Spacelike => rng.random_range(-SPREAD_BOUND..SPREAD_BOUND),
            }
        } else if is_last {
            rng.random_range(CLOSING_MARGIN..std::f64::consts::TAU - CLOSING_MARGIN)
        } else {
            rng.random_range(POLAR_MARGIN..std::f64::consts::PI - POLAR_MARGIN)
        };
        angles.push(value);
    }
    angles
}

/// Draw a radius inside the pinned window.
pub fn sample_radius(rng: &mut ChaCha8Rng) -> f64 {
    rng.random_range(RADIUS_RANGE.0..RADIUS_RANGE.1)
}

/// Draw a full chart point.
pub fn sample_point(rng: &mut ChaCha8Rng, domain: Domain, dim: usize) -> SphericalPoint {
    let angles = sample_angles(rng, domain, dim);
    SphericalPoint::new(sample_radius(rng), angles)
}

/// Fixed mixing direction used by several battery fields.
fn direction(dim: usize, phase: usize) -> Vec<f64> {
    (0..dim)
        .map(|m| {
            let base = 0.3 + 0.05 * (m + phase) as f64;
            if (m + phase) % 2 == 0 {
                base
            } else {
                -base
            }
        })
        .collect()
}

fn normalize(u: &[Jet2]) -> Vec<Jet2> {
    // Any smooth positive degree-one normalizer yields a degree-zero
    // field; the plain Euclidean norm avoids the light-cone degeneracy
    // of the invariant square.
    let mut q = u[0].clone() * u[0].clone();
    for x in &u[1..] {
        q = q + x.clone() * x.clone();
    }
    let rt = q.sqrt();
    u.iter().map(|x| x.clone() / rt.clone()).collect()
}

fn mix(hat: &[Jet2], dir: &[f64]) -> Jet2 {
    let mut acc = hat[0].scale(dir[0]);
    for (x, &c) in hat.iter().zip(dir.iter()).skip(1) {
        acc = acc + x.scale(c);
    }
    acc
}

/// The battery of degree-zero fields for `dim` dimensions: a mix of
/// linear, polynomial, and transcendental profiles over the normalized
/// direction.  Names are stable identifiers for report records.
pub fn field_battery(dim: usize) -> Vec<(&'static str, ScalarField)> {
    assert!(dim >= 2);
    let last = dim - 1;
    let mid = 1.min(last);
    let a = direction(dim, 0);
    let b = direction(dim, 1);
    let mut out: Vec<(&'static str, ScalarField)> = Vec::new();
    out.push((
        "linear-first",
        ScalarField::new(dim, move |u| normalize(u)[0].clone()),
    ));
    out.push((
        "linear-last",
        ScalarField::new(dim, move |u| normalize(u)[last].clone()),
    ));
    out.push((
        "bilinear",
        ScalarField::new(dim, move |u| {
            let hat = normalize(u);
            hat[0].clone() * hat[last].clone() + hat[0].scale(0.5)
        }),
    ));
    out.push((
        "cubic",
        ScalarField::new(dim, move |u| {
            let hat = normalize(u);
            hat[mid].clone().powi(3) - (hat[mid].clone() * hat[0].clone().powi(2)).scale(2.0)
        }),
    ));
    out.push((
        "exp-first",
        ScalarField::new(dim, move |u| normalize(u)[0].scale(0.7).exp()),
    ));
    {
        let a = a.clone();
        out.push((
            "sin-mix",
            ScalarField::new(dim, move |u| mix(&normalize(u), &a).sin()),
        ));
    }
    out.push((
        "rational-first",
        ScalarField::new(dim, move |u| {
            let h0 = normalize(u)[0].clone();
            (h0.clone() * h0).shift(0.5).recip()
        }),
    ));
    out.push((
        "cosh-last",
        ScalarField::new(dim, move |u| normalize(u)[last].scale(0.5).cosh()),
    ));
    out.push((
        "atan-mid",
        ScalarField::new(dim, move |u| normalize(u)[mid].clone().atan()),
    ));
    {
        let a = a.clone();
        out.push((
            "log-mix",
            ScalarField::new(dim, move |u| {
                let m = mix(&normalize(u), &a);
                (m.clone() * m).shift(2.0).ln()
            }),
        ));
    }
    {
        let a = a.clone();
        let b2 = b.clone();
        out.push((
            "poly-mix",
            ScalarField::new(dim, move |u| {
                let hat = normalize(u);
                let ma = mix(&hat, &a);
                let mb = mix(&hat, &b2);
                ma.clone() * ma.clone() - (ma * mb).scale(3.0)
            }),
        ));
    }
    out.push((
        "gauss-mix",
        ScalarField::new(dim, move |u| {
            let m = mix(&normalize(u), &b);
            (-(m.clone() * m).scale(0.3)).exp()
        }),
    ));
    out
}
