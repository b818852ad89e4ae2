//! Acceptance gate: one check per release criterion, each printing a
//! single verdict line.  Every criterion must hold for the build to be
//! considered good; tolerances are pinned next to the checks they guard.

use std::collections::BTreeSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use cpart_core::coords::{to_cartesian_point, Domain};
use cpart_core::lbop::{laplace_cartesian, laplace_generator_sum, laplace_spherical};
use cpart_core::metric::{scaled_err, Signature};
use cpart_core::poisson::{
    bracket, chi, chi_bar, chi_zero, defect_decomposition, generator_defect, lapse_momentum,
    lapse_momentum_bar, sl2, GaussRat, PhasePolynomial,
};
use cpart_core::quantum::{
    balanced_alpha, brst_apply, central_defect, ladder, ordering_constant, physical_residuals,
    substitute_balanced, BrstState, PhysicalConfig, ZPoly, ZVar,
};
use cpart_core::sample::{field_battery, sample_point};
use cpart_core::spectrum::{critical_dimensions, eigenvalue_set, SpectrumSet};
use cpart_core::suites;

use num_bigint::BigInt;
use num_rational::BigRational;

const SEED: u64 = 424242;

fn verdict(number: u32, name: &str, pass: bool) {
    let tag = if pass { "PASS" } else { "FAIL" };
    println!("criterion {number:02} {name} ... {tag}");
    assert!(pass, "criterion {number:02} {name} failed");
}

#[test]
fn criterion_01_critical_dimensions() {
    let mut pass = true;
    for (sig, expected) in [
        (Signature::Euclid, vec![2i64, 4, 6]),
        (Signature::Minkowski, vec![4i64]),
    ] {
        let witnesses = critical_dimensions(sig, 9, 12).expect("valid scan bounds");
        let dims: Vec<i64> = witnesses.iter().map(|w| w.dim).collect();
        pass &= dims == expected;
        pass &= witnesses.iter().all(|w| w.lambda4 == w.dim * (w.dim - 4));
    }
    verdict(1, "critical dimensions", pass);
}

#[test]
fn criterion_02_operator_realizations_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0x0A2E_E001);
    let mut pass = true;
    for dim in 2..=6usize {
        let fields = field_battery(dim);
        assert!(fields.len() >= 10, "battery must hold at least ten fields");
        for sig in [Signature::Euclid, Signature::Minkowski] {
            for &domain in Domain::all(sig) {
                for (_, field) in &fields {
                    for k in 0..100 {
                        let p = sample_point(&mut rng, domain, dim);
                        let u = to_cartesian_point(domain, &p);
                        let cart = laplace_cartesian(sig, field, &u);
                        let chart = laplace_spherical(field, domain, &p)
                            .expect("sample margins keep the chart regular");
                        pass &= scaled_err(cart, chart) <= 1e-6;
                        // The generator-sum oracle is the costliest
                        // realization; a quarter of the points suffices.
                        if k % 4 == 0 {
                            let gen = laplace_generator_sum(sig, field, &u);
                            pass &= scaled_err(cart, gen) <= 1e-6;
                        }
                    }
                }
            }
        }
    }
    verdict(2, "operator realizations agree", pass);
}

#[test]
fn criterion_03_eigenfunction_residuals() {
    let suite = suites::spectrum::suite(SEED);
    let modes: Vec<_> = suite
        .records
        .iter()
        .filter(|r| r.id.starts_with("mode/"))
        .collect();
    let pass = modes.len() >= 80 && modes.iter().all(|r| r.pass);
    verdict(3, "eigenfunction residuals", pass);
}

#[test]
fn criterion_04_three_dimensional_spectrum() {
    let set = eigenvalue_set(Signature::Euclid, 3, 10).expect("valid bounds");
    let expected: BTreeSet<i64> = (0..=10).map(|l| -l * (l + 1)).collect();
    let pass = set == SpectrumSet::Discrete(expected);
    verdict(4, "three-dimensional spectrum", pass);
}

#[test]
fn criterion_05_poisson_algebra() {
    let ik = |n: i64| GaussRat::imag(n, 1);
    let mut pass = true;
    for phi in [lapse_momentum(), lapse_momentum_bar()] {
        for target in [chi(), chi_bar(), chi_zero()] {
            pass &= bracket(&phi, &target).is_zero();
        }
    }
    pass &= (bracket(&chi(), &chi_bar()) + chi_zero().kappa_pow(1).scale(&ik(2))).is_zero();
    pass &= (bracket(&chi(), &chi_zero()) + chi().kappa_pow(1).scale(&ik(4))).is_zero();
    pass &= (bracket(&chi_bar(), &chi_zero()) - chi_bar().kappa_pow(1).scale(&ik(4))).is_zero();
    for n in [1i64, 0, -1] {
        for m in [1i64, 0, -1] {
            let lhs = bracket(&sl2(n), &sl2(m));
            let resid = if n == m {
                lhs
            } else {
                lhs - sl2(n + m).scale(&ik(n - m))
            };
            pass &= resid.is_zero();
        }
    }
    let rebuilt = defect_decomposition()
        .into_iter()
        .fold(PhasePolynomial::zero(), |acc, (c, k)| acc + c * k);
    pass &= (generator_defect() - rebuilt).is_zero();

    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0x05A1_0A55);
    for _ in 0..50 {
        let p = PhasePolynomial::random(&mut rng, 4);
        let q = PhasePolynomial::random(&mut rng, 4);
        let r = PhasePolynomial::random(&mut rng, 4);
        pass &= (bracket(&p, &q) + bracket(&q, &p)).is_zero();
        pass &= (bracket(&p, &(q.clone() * r.clone()))
            - bracket(&p, &q) * r.clone()
            - q.clone() * bracket(&p, &r))
        .is_zero();
        pass &= (bracket(&bracket(&p, &q), &r)
            + bracket(&bracket(&q, &r), &p)
            + bracket(&bracket(&r, &p), &q))
        .is_zero();
    }
    verdict(5, "poisson algebra", pass);
}

#[test]
fn criterion_06_quantum_commutators() {
    let mut states = ZPoly::basis(4, 3);
    states.extend(ZPoly::basis(5, 2));
    let anomaly = |f: &ZPoly| f.times_alpha() - f.times_dim().scale(&GaussRat::ratio(1, 4));
    let mut pass = true;
    for f in &states {
        let lhs = ladder(1, &ladder(-1, f)) - ladder(-1, &ladder(1, f));
        let rhs = (ladder(0, f) - anomaly(f)).scale(&GaussRat::from_int(2));
        pass &= lhs == rhs;
        pass &= ladder(1, &ladder(0, f)) - ladder(0, &ladder(1, f)) == ladder(1, f);
        pass &= ladder(0, &ladder(-1, f)) - ladder(-1, &ladder(0, f)) == ladder(-1, f);
    }
    let battery = vec![
        ZPoly::one(),
        ZPoly::dot(ZVar::Pos, ZVar::PosBar),
        ZPoly::dot(ZVar::Pos, ZVar::Dir1) * ZPoly::dot(ZVar::PosBar, ZVar::Dir2),
        ZPoly::dot(ZVar::Pos, ZVar::Pos),
    ];
    for p in battery {
        for mask in 0..8usize {
            let state = BrstState::pure(mask, p.clone());
            let twice = brst_apply(&brst_apply(&state));
            // The square is the explicit central multiple of the
            // ordering defect, and vanishes once the defect does.
            pass &= twice == central_defect(&state);
            pass &= twice.parts.iter().all(|part| substitute_balanced(part).is_zero());
        }
    }
    verdict(6, "quantum commutators", pass);
}

#[test]
fn criterion_07_ordering_constant() {
    let big = |n: i64| BigRational::from_integer(BigInt::from(n));
    let mut pass = true;
    for d in 2..=32i64 {
        let k = ordering_constant(&balanced_alpha(d), &big(d));
        pass &= k == big(d) * big(d - 4) / big(4);
    }
    verdict(7, "ordering constant", pass);
}

#[test]
fn criterion_08_constrained_dynamics() {
    let suite = suites::dynamics::suite(SEED);
    let required = [
        "drift/bilinear",
        "drift/sesquilinear",
        "drift/momentum",
        "drift/first-integral",
        "velocity-conditions",
        "gauge-identity/euclid",
        "gauge-identity/minkowski",
    ];
    let mut pass = suite.all_pass();
    for id in required {
        pass &= suite.records.iter().any(|r| r.id == id);
    }
    verdict(8, "constrained dynamics", pass);
}

#[test]
fn criterion_09_physical_state() {
    let r = physical_residuals(&PhysicalConfig::standard(), 50, SEED ^ 0x09C4_11D0);
    let pass = r.raising_max <= 1e-7 && r.neutral_max <= 1e-7 && r.momentum_max <= 1e-7;
    verdict(9, "physical state", pass);
}

#[test]
fn criterion_10_deterministic_reports() {
    let once = suites::run_all(SEED).to_json();
    let twice = suites::run_all(SEED).to_json();
    let pass = once == twice && !once.is_empty();
    verdict(10, "deterministic reports", pass);
}
