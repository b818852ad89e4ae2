//! The constraint functions of the model and their exact bracket algebra.

use super::coeff::GaussRat;
use super::poly::{bracket, time_derivative, PhasePolynomial, Scalar, Vector};

/// Shifted momentum square `chi = (pi - i kappa zbar).(pi - i kappa zbar) / 2`.
pub fn chi() -> PhasePolynomial {
    let pp = PhasePolynomial::dot(Vector::Mom, Vector::Mom);
    let pzb = PhasePolynomial::dot(Vector::Mom, Vector::PosBar);
    let zbzb = PhasePolynomial::dot(Vector::PosBar, Vector::PosBar);
    pp.scale(&GaussRat::ratio(1, 2))
        + pzb.kappa_pow(1).scale(&GaussRat::imag(-1, 1))
        + zbzb.kappa_pow(2).scale(&GaussRat::ratio(-1, 2))
}

/// Conjugate partner of [`chi`].
pub fn chi_bar() -> PhasePolynomial {
    chi().conj()
}

/// Mixed constraint `chi0 = (pi - i kappa zbar).(pibar + i kappa z)`.
pub fn chi_zero() -> PhasePolynomial {
    let ppb = PhasePolynomial::dot(Vector::Mom, Vector::MomBar);
    let pz = PhasePolynomial::dot(Vector::Mom, Vector::Pos);
    let zbpb = PhasePolynomial::dot(Vector::PosBar, Vector::MomBar);
    let zzb = PhasePolynomial::dot(Vector::Pos, Vector::PosBar);
    ppb + pz.kappa_pow(1).scale(&GaussRat::i())
        + zbpb.kappa_pow(1).scale(&GaussRat::imag(-1, 1))
        + zzb.kappa_pow(2)
}

/// Primary constraint: the momentum conjugate to the lapse.
pub fn lapse_momentum() -> PhasePolynomial {
    PhasePolynomial::scalar(Scalar::LapseMom)
}

pub fn lapse_momentum_bar() -> PhasePolynomial {
    PhasePolynomial::scalar(Scalar::LapseMomBar)
}

/// Conserved momentum contracted with an inert direction:
/// `(pi + i kappa zbar) . aux`.
pub fn momentum_dot(aux: Vector) -> PhasePolynomial {
    PhasePolynomial::dot(Vector::Mom, aux)
        + PhasePolynomial::dot(Vector::PosBar, aux).kappa_pow(1).scale(&GaussRat::i())
}

/// Its conjugate contracted with an inert direction.
pub fn momentum_dot_bar(aux: Vector) -> PhasePolynomial {
    PhasePolynomial::dot(Vector::MomBar, aux)
        + PhasePolynomial::dot(Vector::Pos, aux).kappa_pow(1).scale(&GaussRat::imag(-1, 1))
}

/// Rescaled constraint basis `L_1 = -chi/2k`, `L_0 = -chi0/4k`,
/// `L_-1 = -chibar/2k`, whose brackets close on the ladder rule
/// `{L_n, L_m} = i (n - m) L_{n+m}`.
pub fn sl2(n: i64) -> PhasePolynomial {
    match n {
        1 => chi().kappa_pow(-1).scale(&GaussRat::ratio(-1, 2)),
        0 => chi_zero().kappa_pow(-1).scale(&GaussRat::ratio(-1, 4)),
        -1 => chi_bar().kappa_pow(-1).scale(&GaussRat::ratio(-1, 2)),
        _ => panic!("ladder index must be -1, 0 or 1, got {n}"),
    }
}

/// Total Hamiltonian `g chi + gbar chibar + c phi + cbar phibar`: the
/// canonical constraints paired with the lapse and the flow multipliers.
pub fn hamiltonian() -> PhasePolynomial {
    PhasePolynomial::scalar(Scalar::Lapse) * chi()
        + PhasePolynomial::scalar(Scalar::LapseBar) * chi_bar()
        + PhasePolynomial::scalar(Scalar::Mult) * lapse_momentum()
        + PhasePolynomial::scalar(Scalar::MultBar) * lapse_momentum_bar()
}

/// Candidate gauge generator
/// `Q = g eps chi + gbar epsbar chibar + eps0 chi0 + xi phi + xib phibar`.
pub fn gauge_generator() -> PhasePolynomial {
    PhasePolynomial::scalar(Scalar::Lapse) * PhasePolynomial::scalar(Scalar::Eps) * chi()
        + PhasePolynomial::scalar(Scalar::LapseBar)
            * PhasePolynomial::scalar(Scalar::EpsBar)
            * chi_bar()
        + PhasePolynomial::scalar(Scalar::EpsZero) * chi_zero()
        + PhasePolynomial::scalar(Scalar::Shift) * lapse_momentum()
        + PhasePolynomial::scalar(Scalar::ShiftBar) * lapse_momentum_bar()
}

/// Generator defect `dQ/dtau + {Q, H}`: what is left of invariance when
/// the parameters are not yet tied together.
pub fn generator_defect() -> PhasePolynomial {
    time_derivative(&gauge_generator()) + bracket(&gauge_generator(), &hamiltonian())
}

/// The defect rewritten over the constraint basis.
///
/// Returns `(coefficient, constraint)` pairs whose products sum exactly to
/// the defect: the generator closes precisely when every coefficient
/// function vanishes, which reproduces the parameter equations
///
/// ```text
///     g eps' + c eps + 4 i kappa g eps0 - xi        (with chi),
///     eps0' - 2 i kappa g gbar (eps - epsbar)       (with chi0),
/// ```
///
/// their conjugates, and the shift derivatives with the primary pair.
/// The first combination is the same one that multiplies the bilinear
/// constraint in the Lagrangian variation identity.
pub fn defect_decomposition() -> Vec<(PhasePolynomial, PhasePolynomial)> {
    let g = PhasePolynomial::scalar(Scalar::Lapse);
    let gb = PhasePolynomial::scalar(Scalar::LapseBar);
    let c = PhasePolynomial::scalar(Scalar::Mult);
    let cb = PhasePolynomial::scalar(Scalar::MultBar);
    let eps = PhasePolynomial::scalar(Scalar::Eps);
    let epsb = PhasePolynomial::scalar(Scalar::EpsBar);
    let eps0 = PhasePolynomial::scalar(Scalar::EpsZero);
    let epsd = PhasePolynomial::scalar(Scalar::EpsDot);
    let epsbd = PhasePolynomial::scalar(Scalar::EpsBarDot);
    let eps0d = PhasePolynomial::scalar(Scalar::EpsZeroDot);
    let xi = PhasePolynomial::scalar(Scalar::Shift);
    let xib = PhasePolynomial::scalar(Scalar::ShiftBar);
    let xid = PhasePolynomial::scalar(Scalar::ShiftDot);
    let xibd = PhasePolynomial::scalar(Scalar::ShiftBarDot);

    let chi_coeff = g.clone() * epsd
        + c * eps.clone()
        + (g * eps0.clone()).kappa_pow(1).scale(&GaussRat::imag(4, 1))
        - xi;
    let chib_coeff = gb.clone() * epsbd
        + cb * epsb.clone()
        + (gb.clone() * eps0).kappa_pow(1).scale(&GaussRat::imag(-4, 1))
        - xib;
    let chi0_coeff = eps0d
        + (PhasePolynomial::scalar(Scalar::Lapse) * gb * (eps - epsb))
            .kappa_pow(1)
            .scale(&GaussRat::imag(-2, 1));
    vec![
        (chi_coeff, chi()),
        (chib_coeff, chi_bar()),
        (chi0_coeff, chi_zero()),
        (xid, lapse_momentum()),
        (xibd, lapse_momentum_bar()),
    ]
}
