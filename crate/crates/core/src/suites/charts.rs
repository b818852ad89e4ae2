//! Chart round-trips, domain classification, and quadric identities.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::domain_label;
use crate::coords::{from_cartesian, to_cartesian_point, Domain};
use crate::metric::{dot, scaled_err, Signature};
use crate::report::{Record, Suite};
use crate::sample::sample_point;

const POINTS: usize = 40;

pub fn suite(seed: u64) -> Suite {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xC4A2_7001);
    let mut out = Suite::new("charts");
    for dim in 2..=6usize {
        for sig in [Signature::Euclid, Signature::Minkowski] {
            for &domain in Domain::all(sig) {
                let label = domain_label(domain);
                let mut round_max: f64 = 0.0;
                let mut square_max: f64 = 0.0;
                let mut classified = true;
                for _ in 0..POINTS {
                    let p = sample_point(&mut rng, domain, dim);
                    let u = to_cartesian_point(domain, &p);
                    let square = dot(sig, &u, &u);
                    let expected = domain.s() * p.r * p.r;
                    square_max = square_max.max(scaled_err(square, expected));
                    let (dom2, p2) = from_cartesian(sig, &u).expect("regular sample");
                    classified &= dom2 == domain;
                    let u2 = to_cartesian_point(dom2, &p2);
                    for (a, b) in u.iter().zip(&u2) {
                        round_max = round_max.max(scaled_err(*a, *b));
                    }
                }
                out.push(Record::vanishes(
                    format!("round-trip/d{dim}/{label}"),
                    round_max,
                    1e-9,
                ));
                out.push(Record::vanishes(
                    format!("invariant-square/d{dim}/{label}"),
                    square_max,
                    1e-9,
                ));
                out.push(Record::matches(
                    format!("classify/d{dim}/{label}"),
                    true.into(),
                    classified.into(),
                ));
            }
        }
    }
    out
}
