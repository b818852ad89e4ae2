//! Separated spectrum of the invariant operator on the unit shells.
//!
//! On a `dim`-dimensional shell the operator separates in the factored
//! chart: an eigenfunction is a radial-angle profile times a product of
//! powers of the middle sines times a circle phase in the last angle,
//!
//! ```text
//!     f = R(theta_1) * S_2^ell * ... * S_{dim-2}^ell * exp(i ell theta_{dim-1}).
//! ```
//!
//! The profile solves a second-order equation with two exponents for each
//! weight `ell`: a direct exponent `p = ell` and a reflected exponent
//! `p = 3 - dim - ell`.  For either exponent there are two independent
//! solutions — the pure power `S_1^p` and a power-times-antiderivative
//! partner obtained by reduction of order — and all four share the
//! eigenvalue `-p(p + dim - 2)`.  Which of the four are actually usable
//! depends on boundedness over the whole shell, and that filter is what
//! distinguishes the compact shell from the hyperbolic ones: the compact
//! shell keeps a discrete ladder in every dimension, while the hyperbolic
//! shells keep only profiles with no exponential growth along the throat.
//!
//! Feeding the surviving eigenvalues into the companion-dimension relation
//! `4 lambda = dim (dim - 4)` singles out a finite set of dimensions; the
//! scan here does that bookkeeping exactly in integers.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::coords::{Domain, TrigCache};
use crate::jet::{Jet2, Real};
use crate::lbop::{laplace_on_sphere, LbError};
use crate::metric::Signature;
use crate::quad;

/// Which of the two exponent branches a separated profile sits on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Branch {
    /// Exponent `p = ell`.
    Direct,
    /// Exponent `p = 3 - dim - ell`.
    Reflected,
}

/// Which of the two independent profile solutions is meant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum RadialKind {
    /// The pure power `S_1^p`.
    Power,
    /// The reduction-of-order partner `S_1^p * integral S_1^{-2p-dim+2}`.
    PowerIntegral,
}

/// Errors from the separated-spectrum layer.
#[derive(Debug, Error, PartialEq)]
pub enum SpectrumError {
    /// The separation chain needs at least one middle or last angle.
    #[error("separated modes need dimension at least 3, got {0}")]
    DimensionTooSmall(i64),
    /// The requested weight must be non-negative.
    #[error("mode weight must be non-negative, got {0}")]
    NegativeWeight(i64),
}

/// Profile exponent for a branch at weight `ell` in dimension `dim`.
pub fn p_exponent(branch: Branch, ell: i64, dim: i64) -> i64 {
    match branch {
        Branch::Direct => ell,
        Branch::Reflected => 3 - dim - ell,
    }
}

/// Shared eigenvalue `-p(p + dim - 2)` of all profiles on a branch.
///
/// Both solution kinds on a branch inherit the same eigenvalue, and the
/// reflected branch at weight `ell` lands on the direct eigenvalue at
/// weight `ell - 1`.
pub fn eigenvalue(branch: Branch, ell: i64, dim: i64) -> i64 {
    let p = p_exponent(branch, ell, dim);
    -p * (p + dim - 2)
}

/// Separation constants of the sine-product tail, outermost first.
///
/// Entry `m` (for `m = 1 ..= dim-2`) is the constant passed down when the
/// angle `theta_m` is split off; with the shell sign `s` it equals
/// `-s * ell (ell + m - 1)`, the circle value at `m = 1` growing into the
/// top eigenvalue of an `m`-sphere as the tail lengthens.
pub fn separation_constants(domain: Domain, ell: i64, dim: i64) -> Result<Vec<i64>, SpectrumError> {
    if dim < 3 {
        return Err(SpectrumError::DimensionTooSmall(dim));
    }
    if ell < 0 {
        return Err(SpectrumError::NegativeWeight(ell));
    }
    let s = i64::from(domain.s_i());
    Ok((1..=dim - 2).map(|m| -s * ell * (ell + m - 1)).collect())
}

/// Why a separated profile fails the global boundedness filter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Inadmissible {
    /// The profile blows up like a negative power at a zero of `S_1`.
    PoleDivergence,
    /// The profile blows up logarithmically at a zero of `S_1`.
    LogDivergence,
    /// On a non-compact shell the profile grows like `exp(rate * |t|)`.
    AsymptoticRate { rate: i64 },
}

/// Global boundedness of a separated profile over its whole shell.
///
/// On the compact shell the only obstructions are the zeros of `S_1`; a
/// negative power there is a pole, and the reduction-of-order integral
/// contributes at worst one such power once its free constant is chosen
/// to cancel the approach from the pole.  On the hyperbolic shells the
/// profile must also stay bounded as the throat coordinate runs off to
/// infinity, where `S_1 ~ exp(|t|)`; any positive net exponent is fatal,
/// which is what thins the spectrum down to a single weight.
pub fn admissible(
    sig: Signature,
    branch: Branch,
    kind: RadialKind,
    ell: i64,
    dim: i64,
) -> Result<Result<(), Inadmissible>, SpectrumError> {
    if dim < 3 {
        return Err(SpectrumError::DimensionTooSmall(dim));
    }
    if ell < 0 {
        return Err(SpectrumError::NegativeWeight(ell));
    }
    let p = p_exponent(branch, ell, dim);
    // Exponent of the integrand in the reduction-of-order partner.
    let a = -2 * p - dim + 2;
    let verdict = match sig {
        Signature::Euclid => match kind {
            // S_1^p on [0, pi]: bounded exactly when the exponent is not
            // a negative power at the endpoints.
            RadialKind::Power => {
                if p >= 0 {
                    Ok(())
                } else {
                    Err(Inadmissible::PoleDivergence)
                }
            }
            // Near a zero of S_1 the partner behaves like
            // S_1^{p + a + 1} = S_1^{3 - dim - p} once the free constant
            // is chosen to cancel the approach from that zero; a == -1
            // is the exponent collision, where the integral is a log.
            RadialKind::PowerIntegral => {
                if a == -1 {
                    Err(Inadmissible::LogDivergence)
                } else if 3 - dim - p >= 0 {
                    Ok(())
                } else {
                    Err(Inadmissible::PoleDivergence)
                }
            }
        },
        Signature::Minkowski => {
            // Along a hyperbolic throat S_1 ~ exp(t)/2, so each profile
            // carries a net exponential rate: p for the pure power, and
            // p plus the growing part of the integral for the partner.
            // A bounded profile must have rate exactly zero; a nonzero
            // rate of either sign blows up at one end of the throat.
            match kind {
                RadialKind::Power => {
                    if p == 0 {
                        Ok(())
                    } else {
                        Err(Inadmissible::AsymptoticRate { rate: p })
                    }
                }
                RadialKind::PowerIntegral => {
                    if a == -1 {
                        Err(Inadmissible::LogDivergence)
                    } else {
                        let rate = p + a.max(0);
                        if rate != 0 {
                            Err(Inadmissible::AsymptoticRate { rate })
                        } else {
                            match branch {
                                // Rate-zero direct partners still hit the
                                // pole of the integral at the chart apex,
                                // which no choice of constant removes.
                                Branch::Direct => Err(Inadmissible::PoleDivergence),
                                Branch::Reflected => Ok(()),
                            }
                        }
                    }
                }
            }
        }
    };
    Ok(verdict)
}

/// The set of eigenvalues surviving the boundedness filter.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum SpectrumSet {
    /// Finitely many integer eigenvalues (discrete ladder up to a cutoff).
    Discrete(BTreeSet<i64>),
    /// The continuum `[0, infinity)` of squared circle frequencies.
    NonNegativeHalfLine,
}

/// Eigenvalues admissible in dimension `dim` with weights up to `ell_max`.
///
/// In dimension 2 the shell is a circle or a hyperbola: single-valued
/// circle modes give the discrete set `{-L^2}`, while the hyperbola
/// carries bounded oscillations of every real frequency, a non-negative
/// half-line of eigenvalues.  From dimension 3 on the compact shell keeps
/// every weight; the hyperbolic shells keep only the modes with vanishing
/// asymptotic rate.
pub fn eigenvalue_set(sig: Signature, dim: i64, ell_max: i64) -> Result<SpectrumSet, SpectrumError> {
    if dim < 2 {
        return Err(SpectrumError::DimensionTooSmall(dim));
    }
    if dim == 2 {
        return Ok(match sig {
            Signature::Euclid => {
                SpectrumSet::Discrete((0..=ell_max).map(|l| -l * l).collect())
            }
            Signature::Minkowski => SpectrumSet::NonNegativeHalfLine,
        });
    }
    let mut set = BTreeSet::new();
    for ell in 0..=ell_max {
        for branch in [Branch::Direct, Branch::Reflected] {
            for kind in [RadialKind::Power, RadialKind::PowerIntegral] {
                if admissible(sig, branch, kind, ell, dim)?.is_ok() {
                    set.insert(eigenvalue(branch, ell, dim));
                }
            }
        }
    }
    Ok(SpectrumSet::Discrete(set))
}

/// One admissible mode certifying that a dimension is distinguished.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriticalWitness {
    pub dim: i64,
    /// Four times the eigenvalue; equals `dim * (dim - 4)` exactly.
    pub lambda4: i64,
    /// Weight of the witnessing mode (circle frequency in dimension 2).
    pub ell: i64,
    /// Branch of the witness; `None` for the dimension-2 circle modes.
    pub branch: Option<Branch>,
    /// Solution kind of the witness; `None` in dimension 2.
    pub kind: Option<RadialKind>,
}

/// Dimensions whose admissible spectrum meets `4 lambda = dim (dim - 4)`.
///
/// The scan is exact integer arithmetic: for each dimension up to
/// `dim_max` it looks for an admissible mode with `4 lambda` equal to
/// `dim (dim - 4)` and records the first witness found.  With the compact
/// shell the matches are dimensions 2, 4 and 6; with the hyperbolic
/// shells only dimension 4 survives.
pub fn critical_dimensions(
    sig: Signature,
    dim_max: i64,
    ell_max: i64,
) -> Result<Vec<CriticalWitness>, SpectrumError> {
    let mut found = Vec::new();
    for dim in 2..=dim_max {
        let target = dim * (dim - 4);
        if dim == 2 {
            match sig {
                Signature::Euclid => {
                    // Circle eigenvalues -L^2: need -4 L^2 == dim(dim-4).
                    if let Some(l) = (0..=ell_max).find(|l| -4 * l * l == target) {
                        found.push(CriticalWitness {
                            dim,
                            lambda4: target,
                            ell: l,
                            branch: None,
                            kind: None,
                        });
                    }
                }
                Signature::Minkowski => {
                    // The half-line [0, infinity) misses the negative
                    // target dim(dim-4)/4 = -1.
                }
            }
            continue;
        }
        'modes: for ell in 0..=ell_max {
            for branch in [Branch::Direct, Branch::Reflected] {
                for kind in [RadialKind::Power, RadialKind::PowerIntegral] {
                    if admissible(sig, branch, kind, ell, dim)?.is_ok()
                        && 4 * eigenvalue(branch, ell, dim) == target
                    {
                        found.push(CriticalWitness {
                            dim,
                            lambda4: target,
                            ell,
                            branch: Some(branch),
                            kind: Some(kind),
                        });
                        break 'modes;
                    }
                }
            }
        }
    }
    Ok(found)
}

/// Reference angle from which the reduction-of-order integral is taken.
///
/// Any choice only shifts the partner by a multiple of the pure power,
/// which solves the same eigenvalue equation, so residual checks are
/// insensitive to it; these sit safely inside each chart.
fn integral_reference(domain: Domain) -> f64 {
    match domain {
        Domain::Euclid => std::f64::consts::FRAC_PI_2,
        Domain::TimelikeUpper => 1.0,
        Domain::TimelikeLower => -1.0,
        Domain::Spacelike => 1.0,
    }
}

/// A fully specified separated mode on one chart of one shell.
#[derive(Clone, Copy, Debug)]
pub struct EigenMode {
    pub domain: Domain,
    pub branch: Branch,
    pub kind: RadialKind,
    pub ell: i64,
    pub dim: i64,
}

/// Value and operator residual of one component of a mode at one point.
#[derive(Clone, Copy, Debug)]
pub struct ModeSample {
    /// Real and imaginary parts of the mode at the sample point.
    pub value: (f64, f64),
    /// `Delta f - lambda f` for the two components.
    pub residual: (f64, f64),
}

impl EigenMode {
    pub fn new(
        domain: Domain,
        branch: Branch,
        kind: RadialKind,
        ell: i64,
        dim: i64,
    ) -> Result<Self, SpectrumError> {
        if dim < 3 {
            return Err(SpectrumError::DimensionTooSmall(dim));
        }
        if ell < 0 {
            return Err(SpectrumError::NegativeWeight(ell));
        }
        Ok(EigenMode { domain, branch, kind, ell, dim })
    }

    pub fn eigenvalue(&self) -> i64 {
        eigenvalue(self.branch, self.ell, self.dim)
    }

    /// Profile factor `R(theta_1)` with exact first and second derivatives.
    fn profile(&self, theta1: &Jet2) -> Jet2 {
        let p = p_exponent(self.branch, self.ell, self.dim);
        let (_, s1) = self.domain.leading_pair(theta1.clone());
        let power = s1.powi(p as i32);
        match self.kind {
            RadialKind::Power => power,
            RadialKind::PowerIntegral => {
                // Reduction of order: the partner is S_1^p times the
                // antiderivative of S_1^{-2p-dim+2}, with exact
                // derivatives supplied by the fundamental theorem.
                let a = -2 * p - self.dim + 2;
                let dom = self.domain;
                let slope_sign = (dom.s_i() * dom.signature().eta00_i()) as f64;
                let integrand = move |t: f64| {
                    let (_, s) = dom.leading_pair(t);
                    s.powi(a as i32)
                };
                let dintegrand = move |t: f64| {
                    let (c, s) = dom.leading_pair(t);
                    a as f64 * s.powi(a as i32 - 1) * slope_sign * c
                };
                let integral = quad::antiderivative_jet(
                    &integrand,
                    &dintegrand,
                    integral_reference(dom),
                    theta1,
                    1e-13,
                );
                power * integral
            }
        }
    }

    /// One component of the separated mode as a function of the angles.
    ///
    /// `real` selects the cosine or sine part of the circle phase.
    pub fn component(&self, angles: &[Jet2], real: bool) -> Jet2 {
        assert_eq!(angles.len(), (self.dim - 1) as usize, "one angle per shell direction");
        let cache = TrigCache::new(self.domain, angles);
        let mut out = self.profile(&angles[0]);
        // Middle sine powers S_2^ell ... S_{dim-2}^ell.
        for m in 2..=(self.dim - 2) as usize {
            out = out * cache.s[m - 1].clone().powi(self.ell as i32);
        }
        let phase = angles[(self.dim - 2) as usize].scale(self.ell as f64);
        let circ = if real { phase.cos() } else { phase.sin() };
        out * circ
    }

    /// Evaluate the mode and its eigenvalue residual at one chart point.
    pub fn sample(&self, angles: &[f64]) -> Result<ModeSample, LbError> {
        let lam = self.eigenvalue() as f64;
        let vars = Jet2::vars(angles);
        let mut value = [0.0; 2];
        let mut residual = [0.0; 2];
        for (slot, real) in [(0usize, true), (1usize, false)] {
            let f = |a: &[Jet2]| self.component(a, real);
            let delta = laplace_on_sphere(self.domain, &f, angles)?;
            let v = self.component(&vars, real).v;
            value[slot] = v;
            residual[slot] = delta - lam * v;
        }
        Ok(ModeSample {
            value: (value[0], value[1]),
            residual: (residual[0], residual[1]),
        })
    }
}

/// Circle/hyperbola eigenvalue of `exp(i L theta)` on a 2-dimensional shell.
///
/// The compact circle gives `-L^2`; on a hyperbolic branch the chart
/// operator is the negated second derivative, giving `+L^2`.
pub fn dim2_eigenvalue(sig: Signature, weight: f64) -> f64 {
    match sig {
        Signature::Euclid => -(weight * weight),
        Signature::Minkowski => weight * weight,
    }
}

/// Residual of the dimension-2 phase mode `exp(i L theta)` at one angle.
pub fn dim2_residual(domain: Domain, weight: f64, angle: f64) -> Result<(f64, f64), LbError> {
    let lam = dim2_eigenvalue(domain.signature(), weight);
    let mut out = [0.0; 2];
    for (slot, real) in [(0usize, true), (1usize, false)] {
        let f = |a: &[Jet2]| {
            let phase = a[0].scale(weight);
            if real {
                phase.cos()
            } else {
                phase.sin()
            }
        };
        let delta = laplace_on_sphere(domain, &f, &[angle])?;
        let v = f(&Jet2::vars(&[angle])).v;
        out[slot] = delta - lam * v;
    }
    Ok((out[0], out[1]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn reflected_branch_shifts_the_direct_ladder() {
        for dim in 3..=8 {
            for ell in 1..=6 {
                assert_eq!(
                    eigenvalue(Branch::Reflected, ell, dim),
                    eigenvalue(Branch::Direct, ell - 1, dim),
                );
                assert_eq!(
                    p_exponent(Branch::Reflected, ell, dim),
                    3 - dim - p_exponent(Branch::Direct, ell, dim),
                );
            }
        }
    }

    #[test]
    fn separation_constants_match_subshell_eigenvalues() {
        // The tail split off at stage m is the top-weight mode of an
        // m-dimensional compact shell, so the constant passed down must
        // be the shell sign times that mode's eigenvalue.
        for domain in Domain::all(Signature::Minkowski).iter().copied().chain([Domain::Euclid]) {
            let s = domain.s_i();
            for ell in 0..=4 {
                let consts = separation_constants(domain, ell, 7).unwrap();
                assert_eq!(consts.len(), 5);
                assert_eq!(consts[0], -s * ell * ell);
                for (idx, c) in consts.iter().enumerate().skip(1) {
                    let m = (idx + 1) as i64;
                    assert_eq!(*c, s * eigenvalue(Branch::Direct, ell, m + 1));
                }
            }
        }
        assert_eq!(
            separation_constants(Domain::Euclid, 1, 2),
            Err(SpectrumError::DimensionTooSmall(2))
        );
    }

    #[test]
    fn admissibility_table_compact_shell() {
        use Branch::*;
        use Inadmissible::*;
        use RadialKind::*;
        let ok = |b, k, l, d| admissible(Signature::Euclid, b, k, l, d).unwrap();
        // Pure powers on the direct branch survive at every weight.
        for dim in 3..=8 {
            for ell in 0..=6 {
                assert_eq!(ok(Direct, Power, ell, dim), Ok(()));
            }
        }
        // Reflected pure powers need a non-negative exponent, which only
        // dimension 3 at weight 0 achieves.
        assert_eq!(ok(Reflected, Power, 0, 3), Ok(()));
        assert_eq!(ok(Reflected, Power, 1, 3), Err(PoleDivergence));
        assert_eq!(ok(Reflected, Power, 0, 4), Err(PoleDivergence));
        // Direct partners always pick up the divergent endpoint power,
        // degrading to a log exactly at the exponent collision.
        assert_eq!(ok(Direct, PowerIntegral, 0, 3), Err(LogDivergence));
        assert_eq!(ok(Direct, PowerIntegral, 1, 3), Err(PoleDivergence));
        assert_eq!(ok(Direct, PowerIntegral, 0, 6), Err(PoleDivergence));
        // Reflected partners are the workhorses: bounded everywhere
        // except the same collision point.
        assert_eq!(ok(Reflected, PowerIntegral, 0, 3), Err(LogDivergence));
        assert_eq!(ok(Reflected, PowerIntegral, 1, 3), Ok(()));
        assert_eq!(ok(Reflected, PowerIntegral, 0, 6), Ok(()));
        assert_eq!(ok(Reflected, PowerIntegral, 2, 4), Ok(()));
    }

    #[test]
    fn admissibility_table_hyperbolic_shells() {
        use Branch::*;
        use Inadmissible::*;
        use RadialKind::*;
        let ok = |b, k, l, d| admissible(Signature::Minkowski, b, k, l, d).unwrap();
        // Only rate-zero profiles stay bounded along the throat; the
        // recorded rate is the signed net exponent.
        assert_eq!(ok(Direct, Power, 0, 4), Ok(()));
        assert_eq!(ok(Direct, Power, 2, 4), Err(AsymptoticRate { rate: 2 }));
        assert_eq!(ok(Reflected, Power, 0, 3), Ok(()));
        assert_eq!(ok(Reflected, Power, 1, 4), Err(AsymptoticRate { rate: -2 }));
        assert_eq!(ok(Reflected, PowerIntegral, 1, 4), Ok(()));
        assert_eq!(ok(Reflected, PowerIntegral, 1, 3), Ok(()));
        assert_eq!(ok(Reflected, PowerIntegral, 0, 3), Err(LogDivergence));
        assert_eq!(ok(Reflected, PowerIntegral, 0, 4), Err(AsymptoticRate { rate: -1 }));
        assert_eq!(ok(Reflected, PowerIntegral, 3, 5), Err(AsymptoticRate { rate: 2 }));
        assert_eq!(ok(Direct, PowerIntegral, 0, 3), Err(LogDivergence));
        assert_eq!(ok(Direct, PowerIntegral, 0, 4), Err(PoleDivergence));
        assert_eq!(ok(Direct, PowerIntegral, 0, 6), Err(PoleDivergence));
        assert_eq!(ok(Direct, PowerIntegral, 3, 5), Err(AsymptoticRate { rate: 3 }));
        // The surviving eigenvalue is always zero.
        for dim in 3..=8 {
            for ell in 0..=6 {
                for branch in [Direct, Reflected] {
                    for kind in [Power, PowerIntegral] {
                        if ok(branch, kind, ell, dim) == Ok(()) {
                            assert_eq!(eigenvalue(branch, ell, dim), 0);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn compact_shell_keeps_the_full_ladder_in_dimension_three() {
        let set = eigenvalue_set(Signature::Euclid, 3, 10).unwrap();
        let expect: BTreeSet<i64> = (0..=10).map(|m| -m * (m + 1)).collect();
        assert_eq!(set, SpectrumSet::Discrete(expect));
    }

    #[test]
    fn hyperbolic_shells_keep_only_zero() {
        for dim in 3..=9 {
            let set = eigenvalue_set(Signature::Minkowski, dim, 12).unwrap();
            assert_eq!(set, SpectrumSet::Discrete(BTreeSet::from([0])));
        }
        assert_eq!(
            eigenvalue_set(Signature::Minkowski, 2, 12).unwrap(),
            SpectrumSet::NonNegativeHalfLine
        );
    }

    #[test]
    fn critical_dimension_scan_is_exact() {
        let euclid = critical_dimensions(Signature::Euclid, 32, 16).unwrap();
        let dims: Vec<i64> = euclid.iter().map(|w| w.dim).collect();
        assert_eq!(dims, vec![2, 4, 6]);
        for w in &euclid {
            assert_eq!(w.lambda4, w.dim * (w.dim - 4));
        }
        // The dimension-2 witness is the first circle harmonic.
        assert_eq!(euclid[0].ell, 1);
        assert_eq!(euclid[0].branch, None);

        let mink = critical_dimensions(Signature::Minkowski, 32, 16).unwrap();
        let dims: Vec<i64> = mink.iter().map(|w| w.dim).collect();
        assert_eq!(dims, vec![4]);
        assert_eq!(mink[0].lambda4, 0);
    }

    #[test]
    fn power_modes_solve_the_eigenvalue_equation() {
        // Spot-check Delta f = lambda f for pure-power modes on several
        // shells, weights and dimensions, both components.
        let cases = [
            (Domain::Euclid, 3, 1, vec![1.1, 0.7]),
            (Domain::Euclid, 4, 2, vec![0.9, 1.2, 2.8]),
            (Domain::Euclid, 5, 3, vec![1.4, 0.8, 1.1, 5.0]),
            (Domain::TimelikeUpper, 4, 2, vec![0.8, 1.3, 1.9]),
            (Domain::TimelikeLower, 3, 1, vec![-1.1, 2.2]),
            (Domain::Spacelike, 4, 1, vec![0.6, 0.9, 4.4]),
            (Domain::Spacelike, 5, 2, vec![-0.7, 1.0, 1.3, 0.4]),
        ];
        for (domain, dim, ell, angles) in cases {
            let mode = EigenMode::new(domain, Branch::Direct, RadialKind::Power, ell, dim).unwrap();
            let out = mode.sample(&angles).unwrap();
            assert_abs_diff_eq!(out.residual.0, 0.0, epsilon = 1e-7);
            assert_abs_diff_eq!(out.residual.1, 0.0, epsilon = 1e-7);
        }
    }

    #[test]
    fn integral_partners_solve_the_same_equation() {
        // The reduction-of-order partner shares the branch eigenvalue.
        let cases = [
            (Domain::Euclid, Branch::Reflected, 4, 1, vec![1.0, 0.9, 1.7]),
            (Domain::Euclid, Branch::Reflected, 6, 0, vec![1.2, 0.8, 1.0, 0.7, 3.0]),
            (Domain::TimelikeUpper, Branch::Reflected, 4, 1, vec![0.9, 1.1, 2.3]),
            (Domain::Spacelike, Branch::Direct, 3, 1, vec![0.8, 1.6]),
            (Domain::TimelikeLower, Branch::Direct, 4, 0, vec![-1.2, 0.7, 1.1]),
        ];
        for (domain, branch, dim, ell, angles) in cases {
            let mode = EigenMode::new(domain, branch, RadialKind::PowerIntegral, ell, dim).unwrap();
            let out = mode.sample(&angles).unwrap();
            assert_abs_diff_eq!(out.residual.0, 0.0, epsilon = 1e-6);
            assert_abs_diff_eq!(out.residual.1, 0.0, epsilon = 1e-6);
        }
    }

    #[test]
    fn inadmissible_modes_still_solve_locally() {
        // Boundedness is a global filter; away from the poles even the
        // rejected profiles satisfy the equation.
        let mode = EigenMode::new(
            Domain::Euclid,
            Branch::Reflected,
            RadialKind::Power,
            2,
            4,
        )
        .unwrap();
        assert!(matches!(
            admissible(Signature::Euclid, Branch::Reflected, RadialKind::Power, 2, 4).unwrap(),
            Err(Inadmissible::PoleDivergence)
        ));
        let out = mode.sample(&[1.0, 1.2, 0.4]).unwrap();
        assert_abs_diff_eq!(out.residual.0, 0.0, epsilon = 1e-7);
        assert_abs_diff_eq!(out.residual.1, 0.0, epsilon = 1e-7);
    }

    #[test]
    fn equator_value_pins_the_orientation() {
        // At theta_1 = pi/2, theta_2 = 0 the weight-1 mode on the
        // 3-dimensional compact shell is exactly (1, 0): S_1 = 1 and the
        // circle phase starts at angle zero.
        let mode =
            EigenMode::new(Domain::Euclid, Branch::Direct, RadialKind::Power, 1, 3).unwrap();
        let out = mode.sample(&[std::f64::consts::FRAC_PI_2, 0.0]).unwrap();
        assert_abs_diff_eq!(out.value.0, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(out.value.1, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn dimension_two_phases_check_out() {
        for (domain, angle) in [
            (Domain::Euclid, 1.3),
            (Domain::TimelikeUpper, 0.9),
            (Domain::TimelikeLower, -1.4),
            (Domain::Spacelike, 0.7),
        ] {
            for weight in [0.0, 1.0, 2.0, 2.5] {
                let (re, im) = dim2_residual(domain, weight, angle).unwrap();
                assert_abs_diff_eq!(re, 0.0, epsilon = 1e-8);
                assert_abs_diff_eq!(im, 0.0, epsilon = 1e-8);
            }
        }
    }

    /// If `S_1^n` times the top-weight tail has a constant Rayleigh
    /// quotient over several chart points, that constant is returned.
    fn monomial_quotient(domain: Domain, dim: i64, ell: i64, n: i64) -> Option<f64> {
        let leading: [f64; 4] = match domain {
            Domain::Euclid => [0.5, 0.9, 1.3, 2.0],
            _ => [0.5, 0.9, 1.4, 1.9],
        };
        let mut lambda: Option<f64> = None;
        for &t1 in &leading {
            let mut angles = vec![t1];
            for m in 0..(dim - 3) {
                angles.push(0.7 + 0.15 * m as f64);
            }
            angles.push(0.35);
            let f = |a: &[Jet2]| -> Jet2 {
                let cache = TrigCache::new(domain, a);
                let (_, s1) = domain.leading_pair(a[0].clone());
                let mut out = s1.powi(n as i32);
                for m in 2..=(dim - 2) as usize {
                    out = out * cache.s[m - 1].clone().powi(ell as i32);
                }
                out * a[(dim - 2) as usize].scale(ell as f64).cos()
            };
            let delta = laplace_on_sphere(domain, &f, &angles).unwrap();
            let v = f(&Jet2::vars(&angles)).v;
            let q = delta / v;
            match lambda {
                None => lambda = Some(q),
                Some(prev) if (q - prev).abs() > 1e-6 * (1.0 + prev.abs()) => return None,
                _ => {}
            }
        }
        lambda
    }

    #[test]
    fn monomial_scan_recovers_exactly_the_catalog() {
        // Brute force over leading exponents: every profile S_1^n whose
        // Rayleigh quotient is constant and which stays bounded on its
        // shell must land on a catalog eigenvalue, and the compact shell
        // must recover the full direct ladder this way.  Boundedness per
        // shell: the compact profile needs a non-negative exponent; the
        // hyperbolic profile vanishes at the apex and grows like
        // exp(n |t|), so only the flat exponent survives both ends.
        for (sig, domains) in [
            (Signature::Euclid, &[Domain::Euclid][..]),
            (
                Signature::Minkowski,
                &[Domain::TimelikeUpper, Domain::TimelikeLower][..],
            ),
        ] {
            for dim in 3..=5i64 {
                let catalog = match eigenvalue_set(sig, dim, 12).unwrap() {
                    SpectrumSet::Discrete(set) => set,
                    SpectrumSet::NonNegativeHalfLine => unreachable!("discrete above dimension 2"),
                };
                let mut recovered = BTreeSet::new();
                for &domain in domains {
                    for ell in 0..=6i64 {
                        for n in -6..=6i64 {
                            let Some(q) = monomial_quotient(domain, dim, ell, n) else {
                                continue;
                            };
                            let bounded = match sig {
                                Signature::Euclid => n >= 0,
                                Signature::Minkowski => n == 0,
                            };
                            if !bounded {
                                continue;
                            }
                            let rounded = q.round() as i64;
                            assert!(
                                (q - rounded as f64).abs() <= 1e-6,
                                "non-integer quotient {q} at dim {dim}, ell {ell}, n {n}"
                            );
                            assert!(
                                catalog.contains(&rounded),
                                "stray eigenvalue {rounded} at dim {dim}, ell {ell}, n {n}"
                            );
                            recovered.insert(rounded);
                        }
                    }
                }
                if sig == Signature::Euclid {
                    for ell in 0..=6 {
                        assert!(recovered.contains(&eigenvalue(Branch::Direct, ell, dim)));
                    }
                } else {
                    assert_eq!(recovered, BTreeSet::from([0]));
                }
            }
        }
    }
}
