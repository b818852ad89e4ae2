//! Exact constraint algebra, operator commutators, and physical states.
//!
//! Everything here except the physical-state sweep is exact arithmetic
//! over Gaussian rationals with the coupling, the ordering parameter,
//! and the dimension kept symbolic: a record passes only when a
//! polynomial identity collapses to literal zero.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::poisson::{
    bracket, chi, chi_bar, chi_zero, defect_decomposition, generator_defect, lapse_momentum,
    lapse_momentum_bar, sl2, GaussRat, PhasePolynomial,
};
use crate::quantum::{
    balanced_alpha, brst_apply, central_defect, ladder, ordering_constant, pair,
    physical_residuals, substitute_balanced, x_dressed, y_dressed, BrstState, CompPoly,
    PhysicalConfig, ZPoly, ZVar,
};
use crate::report::{Record, Suite};

const PHYSICAL_TOL: f64 = 1e-7;

pub fn suite(seed: u64) -> Suite {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xA19E_B7A1);
    let mut out = Suite::new("algebra");
    poisson_records(&mut out);
    axiom_records(&mut rng, &mut out);
    ladder_records(&mut out);
    brst_records(&mut out);
    ordering_records(&mut out);
    adjoint_records(&mut out);
    physical_records(seed, &mut out);
    out
}

fn zero_record(id: impl Into<String>, residual: &PhasePolynomial) -> Record {
    Record::matches(id, json!(true), json!(residual.is_zero()))
}

/// The constraint triple closes on itself with pure `i kappa` structure
/// coefficients, and the gauge generator reproduces its decomposition.
fn poisson_records(out: &mut Suite) {
    let ik = |n: i64| GaussRat::imag(n, 1);
    let mut primary = true;
    for phi in [lapse_momentum(), lapse_momentum_bar()] {
        for target in [chi(), chi_bar(), chi_zero()] {
            primary &= bracket(&phi, &target).is_zero();
        }
    }
    out.push(
        Record::matches("poisson/primary-commutes", json!(true), json!(primary)).eq("3.14"),
    );
    let pair_resid = bracket(&chi(), &chi_bar()) + chi_zero().kappa_pow(1).scale(&ik(2));
    out.push(zero_record("poisson/chi-pair", &pair_resid).eq("3.15"));
    let mid = bracket(&chi(), &chi_zero()) + chi().kappa_pow(1).scale(&ik(4));
    out.push(zero_record("poisson/chi-mid", &mid).eq("3.15"));
    let mid_bar = bracket(&chi_bar(), &chi_zero()) - chi_bar().kappa_pow(1).scale(&ik(4));
    out.push(zero_record("poisson/chibar-mid", &mid_bar).eq("3.15"));

    for n in [1i64, 0, -1] {
        for m in [1i64, 0, -1] {
            let lhs = bracket(&sl2(n), &sl2(m));
            let resid = if n == m {
                lhs
            } else {
                lhs - sl2(n + m).scale(&ik(n - m))
            };
            out.push(zero_record(format!("poisson/ladder/{n}/{m}"), &resid).eq("3.17"));
        }
    }

    let rebuilt = defect_decomposition()
        .into_iter()
        .fold(PhasePolynomial::zero(), |acc, (coeff, constraint)| acc + coeff * constraint);
    let resid = generator_defect() - rebuilt;
    out.push(zero_record("poisson/generator-closure", &resid).eq("3.27"));
}

/// Bracket axioms on random polynomials of the full phase space.
fn axiom_records(rng: &mut ChaCha8Rng, out: &mut Suite) {
    let draws = 50;
    let mut antisymmetry = true;
    let mut leibniz = true;
    let mut jacobi = true;
    for _ in 0..draws {
        let p = PhasePolynomial::random(rng, 4);
        let q = PhasePolynomial::random(rng, 4);
        let r = PhasePolynomial::random(rng, 4);
        antisymmetry &= (bracket(&p, &q) + bracket(&q, &p)).is_zero();
        let product_rule =
            bracket(&p, &(q.clone() * r.clone())) - bracket(&p, &q) * r.clone() - q.clone() * bracket(&p, &r);
        leibniz &= product_rule.is_zero();
        let cycle = bracket(&bracket(&p, &q), &r)
            + bracket(&bracket(&q, &r), &p)
            + bracket(&bracket(&r, &p), &q);
        jacobi &= cycle.is_zero();
    }
    out.push(Record::matches("poisson/antisymmetry", json!(true), json!(antisymmetry))
        .input("draws", draws));
    out.push(Record::matches("poisson/leibniz", json!(true), json!(leibniz)).input("draws", draws));
    out.push(Record::matches("poisson/jacobi", json!(true), json!(jacobi)).input("draws", draws));
}

/// States spanning every monomial in five vectors up to the degrees the
/// commutators can reach.
fn ladder_states() -> Vec<ZPoly> {
    let mut states = ZPoly::basis(4, 3);
    states.extend(ZPoly::basis(5, 2));
    states
}

/// Operator commutators with the ordering parameter kept symbolic.
fn ladder_records(out: &mut Suite) {
    let states = ladder_states();
    let anomaly = |f: &ZPoly| f.times_alpha() - f.times_dim().scale(&GaussRat::ratio(1, 4));
    let mut neutral = true;
    let mut raising = true;
    let mut lowering = true;
    for f in &states {
        let lhs = ladder(1, &ladder(-1, f)) - ladder(-1, &ladder(1, f));
        let rhs = (ladder(0, f) - anomaly(f)).scale(&GaussRat::from_int(2));
        neutral &= (lhs - rhs).is_zero();
        let lhs = ladder(1, &ladder(0, f)) - ladder(0, &ladder(1, f));
        raising &= (lhs - ladder(1, f)).is_zero();
        let lhs = ladder(0, &ladder(-1, f)) - ladder(-1, &ladder(0, f));
        lowering &= (lhs - ladder(-1, f)).is_zero();
    }
    let n = states.len() as i64;
    out.push(Record::matches("quantum/bracket/neutral", json!(true), json!(neutral))
        .eq("4.6")
        .input("states", n));
    out.push(Record::matches("quantum/bracket/raising", json!(true), json!(raising))
        .eq("4.6")
        .input("states", n));
    out.push(Record::matches("quantum/bracket/lowering", json!(true), json!(lowering))
        .eq("4.6")
        .input("states", n));
}

fn ghost_battery() -> Vec<ZPoly> {
    vec![
        ZPoly::one(),
        ZPoly::dot(ZVar::Pos, ZVar::PosBar),
        ZPoly::dot(ZVar::Pos, ZVar::Dir1) * ZPoly::dot(ZVar::PosBar, ZVar::Dir2),
        ZPoly::dot(ZVar::Pos, ZVar::Pos),
        ZPoly::dot(ZVar::PosBar, ZVar::PosBar) * ZPoly::dot(ZVar::Pos, ZVar::Dir1),
    ]
}

/// The squared charge is an explicit multiple of the ordering defect and
/// dies once the parameter is balanced against the dimension.
fn brst_records(out: &mut Suite) {
    let mut central = true;
    let mut balanced = true;
    let mut sectors = 0i64;
    for p in ghost_battery() {
        for mask in 0..8usize {
            let state = BrstState::pure(mask, p.clone());
            let twice = brst_apply(&brst_apply(&state));
            central &= twice == central_defect(&state);
            balanced &= twice.parts.iter().all(|part| substitute_balanced(part).is_zero());
            sectors += 1;
        }
    }
    out.push(Record::matches("quantum/brst/central-term", json!(true), json!(central))
        .eq("4.8")
        .input("sectors", sectors));
    out.push(Record::matches("quantum/brst/nilpotent-balanced", json!(true), json!(balanced))
        .eq("4.8")
        .input("sectors", sectors));
}

/// Exact ordering constant across the dimension scan.
fn ordering_records(out: &mut Suite) {
    let big = |n: i64| BigRational::from_integer(BigInt::from(n));
    let mut all = true;
    for d in 2..=32i64 {
        let k = ordering_constant(&balanced_alpha(d), &big(d));
        all &= k == big(d) * big(d - 4) / big(4);
    }
    out.push(Record::matches("quantum/ordering/scan", json!(true), json!(all))
        .eq("4.24")
        .input("dim_max", 32));
    for d in [2i64, 3, 4, 6] {
        let k = ordering_constant(&balanced_alpha(d), &big(d));
        let expected = big(d) * big(d - 4) / big(4);
        out.push(
            Record::matches(
                format!("quantum/ordering/d{d}"),
                json!(expected.to_string()),
                json!(k.to_string()),
            )
            .eq("4.24"),
        );
    }
}

fn adjoint_battery(dim: usize) -> Vec<CompPoly> {
    let unit = |mu: usize| {
        let mut e = vec![0u8; dim];
        e[mu] = 1;
        e
    };
    let zero = vec![0u8; dim];
    vec![
        CompPoly::one(dim),
        CompPoly::monomial(&unit(0), &zero),
        CompPoly::monomial(&zero, &unit(dim - 1)),
        CompPoly::monomial(&unit(0), &unit(0)),
        CompPoly::monomial(&unit(dim - 1), &zero).scale(&GaussRat::imag(1, 2)),
    ]
}

/// Raising and lowering components are mutual adjoints under the moment
/// pairing, exactly and in every dimension checked.
fn adjoint_records(out: &mut Suite) {
    for dim in 2..=4usize {
        let states = adjoint_battery(dim);
        let mut ok = true;
        for f in &states {
            for g in &states {
                for mu in 0..dim {
                    ok &= pair(&x_dressed(mu, f), g) == pair(f, &y_dressed(mu, g));
                }
            }
        }
        out.push(
            Record::matches(format!("quantum/adjoint/d{dim}"), json!(true), json!(ok))
                .input("states", states.len() as i64),
        );
    }
}

/// Numerical residuals of the distinguished four-dimensional state.
fn physical_records(seed: u64, out: &mut Suite) {
    let cfg = PhysicalConfig::standard();
    let r = physical_residuals(&cfg, 50, seed ^ 0x9B1E_D0C7);
    out.push(Record::vanishes("physical/raising", r.raising_max, PHYSICAL_TOL)
        .eq("4.13")
        .input("samples", r.samples as i64));
    out.push(Record::vanishes("physical/neutral", r.neutral_max, PHYSICAL_TOL)
        .eq("4.13")
        .input("samples", r.samples as i64));
    out.push(Record::vanishes("physical/momentum", r.momentum_max, PHYSICAL_TOL)
        .eq("4.14")
        .input("samples", r.samples as i64));
}
