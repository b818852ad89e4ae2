//! Quadratic operators built from the covariant derivative pair.
//!
//! With `X = -i d/dz - i k zb` and `Y = -i d/dzb + i k z`, the three
//! squares divided by four times the coupling close into a rescaled
//! ladder algebra whose neutral bracket picks up an anomaly proportional
//! to the ordering parameter minus a quarter of the dimension.  All of
//! that is checked exactly on polynomial states.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::zpoly::{ZPoly, ZVar};
use crate::poisson::GaussRat;

/// `X.X` applied to a polynomial state.
pub fn x_square(f: &ZPoly) -> ZPoly {
    let box_z = f.second(ZVar::Pos, ZVar::Pos);
    let drift = f.contract(ZVar::PosBar, ZVar::Pos).kappa_pow(1);
    let quad = (f.clone() * ZPoly::dot(ZVar::PosBar, ZVar::PosBar)).kappa_pow(2);
    -(box_z + drift.scale(&GaussRat::from_int(2)) + quad)
}

/// `Y.Y` applied to a polynomial state.
pub fn y_square(f: &ZPoly) -> ZPoly {
    let box_zb = f.second(ZVar::PosBar, ZVar::PosBar);
    let drift = f.contract(ZVar::Pos, ZVar::PosBar).kappa_pow(1);
    let quad = (f.clone() * ZPoly::dot(ZVar::Pos, ZVar::Pos)).kappa_pow(2);
    -(box_zb - drift.scale(&GaussRat::from_int(2)) + quad)
}

/// `X.Y` applied to a polynomial state.
pub fn x_dot_y(f: &ZPoly) -> ZPoly {
    let mixed = f.second(ZVar::Pos, ZVar::PosBar);
    let trace = f.times_dim().kappa_pow(1);
    let euler = f.contract(ZVar::Pos, ZVar::Pos).kappa_pow(1);
    let euler_bar = f.contract(ZVar::PosBar, ZVar::PosBar).kappa_pow(1);
    let quad = (f.clone() * ZPoly::dot(ZVar::Pos, ZVar::PosBar)).kappa_pow(2);
    -mixed + trace + euler - euler_bar + quad
}

/// `Y.X` applied to a polynomial state.
pub fn y_dot_x(f: &ZPoly) -> ZPoly {
    let mixed = f.second(ZVar::Pos, ZVar::PosBar);
    let trace = f.times_dim().kappa_pow(1);
    let euler = f.contract(ZVar::Pos, ZVar::Pos).kappa_pow(1);
    let euler_bar = f.contract(ZVar::PosBar, ZVar::PosBar).kappa_pow(1);
    let quad = (f.clone() * ZPoly::dot(ZVar::Pos, ZVar::PosBar)).kappa_pow(2);
    -mixed - trace + euler - euler_bar + quad
}

/// Ladder operator with weight `n` in `{-1, 0, 1}` applied to a state.
///
/// The raising and lowering members are the derivative squares over four
/// times the coupling; the neutral member adds the ordering parameter.
pub fn ladder(n: i64, f: &ZPoly) -> ZPoly {
    let quarter = GaussRat::ratio(1, 4);
    match n {
        1 => x_square(f).kappa_pow(-1).scale(&quarter),
        -1 => y_square(f).kappa_pow(-1).scale(&quarter),
        0 => y_dot_x(f).kappa_pow(-1).scale(&quarter) + f.times_alpha(),
        _ => panic!("ladder weight must lie in -1..=1"),
    }
}

fn big(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Quadratic ordering constant `2a(D - 2(a + 1))` produced when the
/// neutral operator acts on a power of the invariant square.
pub fn ordering_constant(alpha: &BigRational, dim: &BigRational) -> BigRational {
    big(2) * alpha * (dim - big(2) * (alpha + big(1)))
}

/// The ordering parameter that makes the ladder anomaly vanish: a
/// quarter of the dimension.
pub fn balanced_alpha(dim: i64) -> BigRational {
    big(dim) / big(4)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn anomaly(f: &ZPoly) -> ZPoly {
        // (alpha - D/4) f
        f.times_alpha() - f.times_dim().scale(&GaussRat::ratio(1, 4))
    }

    #[test]
    fn squares_act_as_expected_on_the_unit_state() {
        let one = ZPoly::one();
        let zbzb = ZPoly::dot(ZVar::PosBar, ZVar::PosBar);
        let zz = ZPoly::dot(ZVar::Pos, ZVar::Pos);
        let zzb = ZPoly::dot(ZVar::Pos, ZVar::PosBar);
        assert_eq!(x_square(&one), -zbzb.kappa_pow(2));
        assert_eq!(y_square(&one), -zz.kappa_pow(2));
        assert_eq!(
            y_dot_x(&one),
            -one.times_dim().kappa_pow(1) + zzb.kappa_pow(2)
        );
        assert_eq!(
            x_dot_y(&one),
            one.times_dim().kappa_pow(1) + zzb.kappa_pow(2)
        );
    }

    #[test]
    fn component_commutator_is_a_pure_trace() {
        for f in ZPoly::basis(4, 3) {
            let lhs = x_dot_y(&f) - y_dot_x(&f);
            let rhs = f.times_dim().kappa_pow(1).scale(&GaussRat::from_int(2));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn mixed_seconds_are_symmetric_inside_the_squares() {
        for f in ZPoly::basis(5, 2) {
            assert_eq!(
                f.second(ZVar::Pos, ZVar::PosBar),
                f.second(ZVar::PosBar, ZVar::Pos)
            );
        }
    }

    #[test]
    fn ladder_brackets_close_with_the_ordering_anomaly() {
        let mut states = ZPoly::basis(4, 3);
        states.extend(ZPoly::basis(5, 2));
        for f in &states {
            // [L1, L-1] = 2 (L0 - (alpha - D/4))
            let lhs = ladder(1, &ladder(-1, f)) - ladder(-1, &ladder(1, f));
            let rhs = (ladder(0, f) - anomaly(f)).scale(&GaussRat::from_int(2));
            assert_eq!(lhs, rhs, "neutral bracket failed on {f}");
            // [L1, L0] = L1
            let lhs = ladder(1, &ladder(0, f)) - ladder(0, &ladder(1, f));
            assert_eq!(lhs, ladder(1, f), "raising bracket failed on {f}");
            // [L0, L-1] = L-1
            let lhs = ladder(0, &ladder(-1, f)) - ladder(-1, &ladder(0, f));
            assert_eq!(lhs, ladder(-1, f), "lowering bracket failed on {f}");
        }
    }

    #[test]
    fn ordering_constant_balances_at_a_quarter_dimension() {
        for d in 2..=32i64 {
            let k = ordering_constant(&balanced_alpha(d), &big(d));
            assert_eq!(k, big(d) * big(d - 4) / big(4));
        }
        // The four-dimensional value vanishes exactly.
        assert_eq!(ordering_constant(&balanced_alpha(4), &big(4)), big(0));
    }
}
