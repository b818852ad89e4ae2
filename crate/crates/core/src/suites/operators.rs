//! Agreement of the three operator realizations on the field battery.
//!
//! For every dimension, domain, and battery field, the closed Cartesian
//! form, the generator sum, and the chart realization are evaluated at
//! the same sampled points and compared pairwise.  A second family of
//! records checks the split of the flat second-order operator into
//! radial and tangential parts, and the closure of generator
//! commutators.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::domain_label;
use crate::coords::{to_cartesian_point, Domain};
use crate::lbop::{
    box_split_residual, commutator_residual, laplace_cartesian, laplace_generator_sum,
    laplace_spherical,
};
use crate::metric::{scaled_err, Signature};
use crate::report::{Record, Suite};
use crate::sample::{field_battery, sample_point};

const POINTS_PER_FIELD: usize = 9;
const AGREE_TOL: f64 = 1e-6;
const SPLIT_TOL: f64 = 1e-9;

pub fn suite(seed: u64) -> Suite {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x09E2_A113);
    let mut out = Suite::new("operators");
    for dim in 2..=6usize {
        let fields = field_battery(dim);
        for sig in [Signature::Euclid, Signature::Minkowski] {
            for &domain in Domain::all(sig) {
                let label = domain_label(domain);
                for (name, field) in &fields {
                    let mut worst: f64 = 0.0;
                    for _ in 0..POINTS_PER_FIELD {
                        let p = sample_point(&mut rng, domain, dim);
                        let u = to_cartesian_point(domain, &p);
                        let cart = laplace_cartesian(sig, field, &u);
                        let gen = laplace_generator_sum(sig, field, &u);
                        let chart = laplace_spherical(field, domain, &p)
                            .expect("margins keep the chart regular");
                        worst = worst
                            .max(scaled_err(cart, gen))
                            .max(scaled_err(cart, chart));
                    }
                    out.push(Record::vanishes(
                        format!("agree/d{dim}/{label}/{name}"),
                        worst,
                        AGREE_TOL,
                    ));
                }
                // The flat operator splits into radial and tangential
                // parts; checked on one transcendental battery field.
                let probe = &fields[5].1;
                let mut split_max: f64 = 0.0;
                let mut comm_max: f64 = 0.0;
                for _ in 0..5 {
                    let p = sample_point(&mut rng, domain, dim);
                    let u = to_cartesian_point(domain, &p);
                    split_max = split_max.max(box_split_residual(sig, probe, &u).abs());
                    if dim >= 3 {
                        comm_max = comm_max
                            .max(commutator_residual(sig, probe, &u, (0, 1), (1, 2)).abs())
                            .max(commutator_residual(sig, probe, &u, (0, 2), (1, 2)).abs());
                    }
                }
                out.push(Record::vanishes(
                    format!("box-split/d{dim}/{label}"),
                    split_max,
                    SPLIT_TOL,
                ));
                if dim >= 3 {
                    out.push(Record::vanishes(
                        format!("generator-closure/d{dim}/{label}"),
                        comm_max,
                        SPLIT_TOL,
                    ));
                }
            }
        }
    }
    out
}
