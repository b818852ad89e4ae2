//! Critical dimensions, admissible spectra, and mode residuals.
//!
//! The exact part of the suite is integer arithmetic only: the scan for
//! dimensions whose spectrum meets the quadric eigenvalue, the discrete
//! eigenvalue sets per shell, the boundedness verdicts for a table of
//! separated profiles, and the separation constants.  The numerical part
//! evaluates every admissible mode on chart samples and bounds the
//! eigenvalue residual after normalizing by the largest sampled value.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::{domain_label, signature_label};
use crate::coords::Domain;
use crate::metric::Signature;
use crate::report::{Record, Suite};
use crate::sample::sample_angles;
use crate::spectrum::{
    admissible, critical_dimensions, dim2_residual, eigenvalue_set, separation_constants, Branch,
    EigenMode, Inadmissible, RadialKind, SpectrumSet,
};

const MODE_POINTS: usize = 50;
const MODE_TOL: f64 = 1e-8;

fn branch_label(branch: Branch) -> &'static str {
    match branch {
        Branch::Direct => "direct",
        Branch::Reflected => "reflected",
    }
}

fn kind_label(kind: RadialKind) -> &'static str {
    match kind {
        RadialKind::Power => "power",
        RadialKind::PowerIntegral => "partner",
    }
}

pub fn suite(seed: u64) -> Suite {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5BEC_0515);
    let mut out = Suite::new("spectrum");
    critical_records(&mut out);
    set_records(&mut out);
    admissibility_records(&mut out);
    separation_records(&mut out);
    mode_records(&mut rng, &mut out);
    dim2_records(&mut rng, &mut out);
    out
}

/// Exact scan for the distinguished dimensions, with one witness each.
fn critical_records(out: &mut Suite) {
    for (sig, expected_dims) in [
        (Signature::Euclid, vec![2i64, 4, 6]),
        (Signature::Minkowski, vec![4i64]),
    ] {
        let slabel = signature_label(sig);
        let witnesses = critical_dimensions(sig, 9, 12).expect("scan bounds are valid");
        let dims: Vec<i64> = witnesses.iter().map(|w| w.dim).collect();
        out.push(
            Record::matches(format!("critical/dims/{slabel}"), json!(expected_dims), json!(dims))
                .eq("6.36")
                .input("dim_max", 9)
                .input("ell_max", 12),
        );
        for w in &witnesses {
            let mut record =
                Record::exact_int(format!("critical/lambda4/{slabel}/d{}", w.dim), w.dim * (w.dim - 4), w.lambda4)
                    .input("ell", w.ell);
            if let (Some(branch), Some(kind)) = (w.branch, w.kind) {
                record = record
                    .input("branch", branch_label(branch))
                    .input("kind", kind_label(kind));
            }
            out.push(record);
        }
    }
}

/// Discrete eigenvalue sets, matched structurally against literals.
fn set_records(out: &mut Suite) {
    let to_value = |set: &SpectrumSet| serde_json::to_value(set).expect("set serialization");
    let discrete = |values: &[i64]| SpectrumSet::Discrete(values.iter().copied().collect());

    let d3 = eigenvalue_set(Signature::Euclid, 3, 10).expect("valid bounds");
    let ladder: Vec<i64> = (0..=10).map(|l| -l * (l + 1)).collect();
    out.push(
        Record::matches("set/euclid/d3", to_value(&discrete(&ladder)), to_value(&d3))
            .input("ell_max", 10),
    );

    let d2e = eigenvalue_set(Signature::Euclid, 2, 10).expect("valid bounds");
    let circle: Vec<i64> = (0..=10).map(|l| -l * l).collect();
    out.push(
        Record::matches("set/euclid/d2", to_value(&discrete(&circle)), to_value(&d2e))
            .input("ell_max", 10),
    );

    let d2m = eigenvalue_set(Signature::Minkowski, 2, 10).expect("valid bounds");
    out.push(Record::matches(
        "set/minkowski/d2",
        to_value(&SpectrumSet::NonNegativeHalfLine),
        to_value(&d2m),
    ));

    for dim in 3..=7i64 {
        let set = eigenvalue_set(Signature::Minkowski, dim, 10).expect("valid bounds");
        out.push(
            Record::matches(format!("set/minkowski/d{dim}"), to_value(&discrete(&[0])), to_value(&set))
                .input("ell_max", 10),
        );
    }
}

/// Spot table of boundedness verdicts for separated profiles.
fn admissibility_records(out: &mut Suite) {
    let cases: [(Signature, Branch, RadialKind, i64, i64, Result<(), Inadmissible>); 7] = [
        (Signature::Euclid, Branch::Direct, RadialKind::Power, 3, 4, Ok(())),
        (
            Signature::Euclid,
            Branch::Reflected,
            RadialKind::Power,
            2,
            4,
            Err(Inadmissible::PoleDivergence),
        ),
        (
            Signature::Euclid,
            Branch::Reflected,
            RadialKind::PowerIntegral,
            0,
            3,
            Err(Inadmissible::LogDivergence),
        ),
        (
            Signature::Minkowski,
            Branch::Direct,
            RadialKind::Power,
            2,
            5,
            Err(Inadmissible::AsymptoticRate { rate: 2 }),
        ),
        (Signature::Minkowski, Branch::Reflected, RadialKind::PowerIntegral, 1, 4, Ok(())),
        (
            Signature::Minkowski,
            Branch::Reflected,
            RadialKind::PowerIntegral,
            2,
            4,
            Err(Inadmissible::AsymptoticRate { rate: 1 }),
        ),
        (
            Signature::Minkowski,
            Branch::Direct,
            RadialKind::PowerIntegral,
            0,
            4,
            Err(Inadmissible::PoleDivergence),
        ),
    ];
    for (sig, branch, kind, ell, dim, expected) in cases {
        let verdict = admissible(sig, branch, kind, ell, dim).expect("valid mode parameters");
        let tag = match sig {
            Signature::Euclid => "6.33",
            Signature::Minkowski => "6.34",
        };
        out.push(
            Record::matches(
                format!(
                    "admissible/{}/{}/{}/l{ell}/d{dim}",
                    signature_label(sig),
                    branch_label(branch),
                    kind_label(kind),
                ),
                serde_json::to_value(expected).expect("verdict serialization"),
                serde_json::to_value(verdict).expect("verdict serialization"),
            )
            .eq(tag),
        );
    }
}

/// Separation constants against literal tables.
fn separation_records(out: &mut Suite) {
    let cases: [(Domain, i64, i64, &[i64]); 3] = [
        (Domain::Euclid, 2, 5, &[-4, -6, -8]),
        (Domain::Spacelike, 3, 6, &[-9, -12, -15, -18]),
        (Domain::TimelikeUpper, 1, 4, &[1, 2]),
    ];
    for (domain, ell, dim, expected) in cases {
        let got = separation_constants(domain, ell, dim).expect("valid mode parameters");
        out.push(Record::matches(
            format!("separation/{}/l{ell}/d{dim}", domain_label(domain)),
            json!(expected),
            json!(got),
        ));
    }
}

/// Eigenvalue residuals of every admissible mode, dimensions 3 to 6.
fn mode_records(rng: &mut ChaCha8Rng, out: &mut Suite) {
    for dim in 3..=6i64 {
        for sig in [Signature::Euclid, Signature::Minkowski] {
            for &domain in Domain::all(sig) {
                let label = domain_label(domain);
                for ell in 0..=5i64 {
                    for branch in [Branch::Direct, Branch::Reflected] {
                        for kind in [RadialKind::Power, RadialKind::PowerIntegral] {
                            let verdict = admissible(sig, branch, kind, ell, dim)
                                .expect("valid mode parameters");
                            if verdict.is_err() {
                                continue;
                            }
                            let mode = EigenMode::new(domain, branch, kind, ell, dim)
                                .expect("valid mode parameters");
                            let mut value_max: f64 = 0.0;
                            let mut resid_max: f64 = 0.0;
                            for _ in 0..MODE_POINTS {
                                let angles = sample_angles(rng, domain, dim as usize);
                                let s = mode.sample(&angles).expect("margins keep the chart regular");
                                value_max = value_max.max(s.value.0.abs()).max(s.value.1.abs());
                                resid_max =
                                    resid_max.max(s.residual.0.abs()).max(s.residual.1.abs());
                            }
                            out.push(
                                Record::vanishes(
                                    format!(
                                        "mode/d{dim}/{label}/{}/{}/l{ell}",
                                        branch_label(branch),
                                        kind_label(kind),
                                    ),
                                    resid_max / value_max,
                                    MODE_TOL,
                                )
                                .input("eigenvalue", mode.eigenvalue())
                                .input("points", MODE_POINTS as i64),
                            );
                        }
                    }
                }
            }
        }
    }
}

/// Phase modes on the two-dimensional shells.
fn dim2_records(rng: &mut ChaCha8Rng, out: &mut Suite) {
    for ell in 0..=5i64 {
        let mut worst: f64 = 0.0;
        for _ in 0..MODE_POINTS {
            let angle = sample_angles(rng, Domain::Euclid, 2)[0];
            let (re, im) = dim2_residual(Domain::Euclid, ell as f64, angle)
                .expect("circle chart is regular");
            worst = worst.max(re.abs()).max(im.abs());
        }
        out.push(
            Record::vanishes(format!("mode/d2/euclid/l{ell}"), worst, MODE_TOL)
                .input("eigenvalue", -ell * ell),
        );
    }
    for &domain in Domain::all(Signature::Minkowski) {
        let label = domain_label(domain);
        for weight in [0.0f64, 0.7, 1.3, 2.2] {
            let mut worst: f64 = 0.0;
            for _ in 0..MODE_POINTS {
                let angle = sample_angles(rng, domain, 2)[0];
                let (re, im) =
                    dim2_residual(domain, weight, angle).expect("margins keep the chart regular");
                worst = worst.max(re.abs()).max(im.abs());
            }
            out.push(
                Record::vanishes(format!("mode/d2/{label}/w{weight}"), worst, MODE_TOL)
                    .input("weight", weight),
            );
        }
    }
}
