//! Ghost extension of the ladder algebra and its squared charge.
//!
//! Three anticommuting ghosts pair with the three ladder operators.  The
//! charge acts as ghost-times-operator plus the cubic structure terms; on
//! a closed algebra its square would vanish, and here it instead reduces
//! to a central multiple of the top ghost pair — the same ordering
//! anomaly the plain brackets produce.  Substituting a quarter of the
//! dimension for the ordering parameter kills it identically.

use super::ops::ladder;
use super::zpoly::ZPoly;
use crate::poisson::GaussRat;

/// Number of ghost basis monomials (subsets of the three ghosts).
const SECTORS: usize = 8;

/// Bit for the ghost paired with the lowering operator.
const G_LOWER: usize = 0;
/// Bit for the ghost paired with the neutral operator.
const G_MID: usize = 1;
/// Bit for the ghost paired with the raising operator.
const G_UPPER: usize = 2;

/// Wave function with ghost dependence: one polynomial per ghost-basis
/// monomial, indexed by the bitmask of ghosts present.  Masks read in
/// ascending ladder weight, so bit 0 is the lowering ghost.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BrstState {
    pub parts: [ZPoly; SECTORS],
}

impl BrstState {
    pub fn zero() -> BrstState {
        BrstState::default()
    }

    /// State concentrated in one ghost sector.
    pub fn pure(mask: usize, poly: ZPoly) -> BrstState {
        assert!(mask < SECTORS);
        let mut s = BrstState::zero();
        s.parts[mask] = poly;
        s
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(ZPoly::is_zero)
    }

    fn add_into(&mut self, mask: usize, sign: i64, poly: ZPoly) {
        let signed = if sign >= 0 { poly } else { -poly };
        self.parts[mask] = std::mem::take(&mut self.parts[mask]) + signed;
    }
}

fn bits_below(bit: usize, mask: usize) -> u32 {
    (mask & ((1 << bit) - 1)).count_ones()
}

/// Left multiplication by one ghost: `None` if it is already present,
/// otherwise the reordering sign and the new mask.
fn ghost_mul(bit: usize, mask: usize) -> Option<(i64, usize)> {
    if mask & (1 << bit) != 0 {
        return None;
    }
    let sign = if bits_below(bit, mask) % 2 == 0 { 1 } else { -1 };
    Some((sign, mask | (1 << bit)))
}

/// Left derivative with respect to one ghost.
fn ghost_del(bit: usize, mask: usize) -> Option<(i64, usize)> {
    if mask & (1 << bit) == 0 {
        return None;
    }
    let sign = if bits_below(bit, mask) % 2 == 0 { 1 } else { -1 };
    Some((sign, mask & !(1 << bit)))
}

fn ghost_bit(weight: i64) -> usize {
    match weight {
        -1 => G_LOWER,
        0 => G_MID,
        1 => G_UPPER,
        _ => unreachable!(),
    }
}

/// Apply the ghost charge once.
pub fn brst_apply(state: &BrstState) -> BrstState {
    let mut out = BrstState::zero();
    // Ghost times ladder operator.
    for mask in 0..SECTORS {
        let p = &state.parts[mask];
        if p.is_zero() {
            continue;
        }
        for weight in [-1i64, 0, 1] {
            if let Some((sign, m2)) = ghost_mul(ghost_bit(weight), mask) {
                out.add_into(m2, sign, ladder(weight, p));
            }
        }
    }
    // Cubic structure terms; each derivative is applied first, then the
    // two ghost multiplications right to left.
    let cubic: [(usize, usize, usize, i64); 3] = [
        (G_UPPER, G_MID, G_UPPER, 1),
        (G_UPPER, G_LOWER, G_MID, 2),
        (G_MID, G_LOWER, G_LOWER, 1),
    ];
    for mask in 0..SECTORS {
        let p = &state.parts[mask];
        if p.is_zero() {
            continue;
        }
        for (left, right, del, factor) in cubic {
            let Some((s1, m1)) = ghost_del(del, mask) else {
                continue;
            };
            let Some((s2, m2)) = ghost_mul(right, m1) else {
                continue;
            };
            let Some((s3, m3)) = ghost_mul(left, m2) else {
                continue;
            };
            let weight = -s1 * s2 * s3 * factor;
            out.add_into(m3, 1, p.scale(&GaussRat::from_int(weight)));
        }
    }
    out
}

/// The central operator the squared charge reduces to: minus twice the
/// ordering anomaly times the outer ghost pair.
pub fn central_defect(state: &BrstState) -> BrstState {
    let mut out = BrstState::zero();
    for mask in 0..SECTORS {
        let p = &state.parts[mask];
        if p.is_zero() {
            continue;
        }
        let Some((s1, m1)) = ghost_mul(G_LOWER, mask) else {
            continue;
        };
        let Some((s2, m2)) = ghost_mul(G_UPPER, m1) else {
            continue;
        };
        // -2 (alpha - D/4) p
        let scaled = p.times_alpha().scale(&GaussRat::from_int(-2))
            + p.times_dim().scale(&GaussRat::ratio(1, 2));
        out.add_into(m2, s1 * s2, scaled);
    }
    out
}

/// Substitute a quarter of the dimension for the ordering parameter,
/// collecting the resulting dimension powers exactly.
pub fn substitute_balanced(p: &ZPoly) -> ZPoly {
    p.map_alpha_to_quarter_dim()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum::zpoly::ZVar;

    fn battery() -> Vec<ZPoly> {
        vec![
            ZPoly::one(),
            ZPoly::dot(ZVar::Pos, ZVar::PosBar),
            ZPoly::dot(ZVar::Pos, ZVar::Dir1) * ZPoly::dot(ZVar::PosBar, ZVar::Dir2),
            ZPoly::dot(ZVar::Pos, ZVar::Pos),
            ZPoly::dot(ZVar::PosBar, ZVar::PosBar) * ZPoly::dot(ZVar::Pos, ZVar::Dir1),
        ]
    }

    #[test]
    fn ghost_reordering_signs_are_consistent() {
        // Multiplying in descending order builds the canonical monomial
        // with the parity of the permutation.
        let (s1, m1) = ghost_mul(G_UPPER, 0).unwrap();
        let (s2, m2) = ghost_mul(G_MID, m1).unwrap();
        let (s3, m3) = ghost_mul(G_LOWER, m2).unwrap();
        assert_eq!(m3, 0b111);
        assert_eq!(s1 * s2 * s3, 1);
        let (t1, n1) = ghost_mul(G_LOWER, 0).unwrap();
        let (t2, n2) = ghost_mul(G_MID, n1).unwrap();
        let (t3, n3) = ghost_mul(G_UPPER, n2).unwrap();
        assert_eq!(n3, 0b111);
        assert_eq!(t1 * t2 * t3, -1);
        // Deriving an inner ghost crosses the ones before it.
        let (sd, md) = ghost_del(G_MID, 0b011).unwrap();
        assert_eq!((sd, md), (-1, 0b001));
        assert!(ghost_mul(G_MID, 0b010).is_none());
        assert!(ghost_del(G_UPPER, 0b011).is_none());
    }

    #[test]
    fn squared_charge_is_the_central_anomaly() {
        for p in battery() {
            for mask in 0..SECTORS {
                let state = BrstState::pure(mask, p.clone());
                let twice = brst_apply(&brst_apply(&state));
                let defect = central_defect(&state);
                assert_eq!(twice, defect, "sector {mask} failed on {p}");
            }
        }
        // A state spread over several sectors at once.
        let mut spread = BrstState::zero();
        spread.parts[0b000] = ZPoly::dot(ZVar::Pos, ZVar::PosBar);
        spread.parts[0b010] = ZPoly::one();
        spread.parts[0b101] = ZPoly::dot(ZVar::Pos, ZVar::Dir1);
        spread.parts[0b111] = ZPoly::dot(ZVar::PosBar, ZVar::Dir2);
        let twice = brst_apply(&brst_apply(&spread));
        assert_eq!(twice, central_defect(&spread));
    }

    #[test]
    fn balancing_the_ordering_parameter_restores_nilpotency() {
        for p in battery() {
            for mask in 0..SECTORS {
                let state = BrstState::pure(mask, p.clone());
                let twice = brst_apply(&brst_apply(&state));
                for part in &twice.parts {
                    assert!(substitute_balanced(part).is_zero());
                }
            }
        }
    }

    #[test]
    fn charge_moves_the_vacuum_into_single_ghost_sectors() {
        let p = ZPoly::dot(ZVar::Pos, ZVar::PosBar);
        let q = brst_apply(&BrstState::pure(0, p.clone()));
        assert_eq!(q.parts[1 << G_LOWER], crate::quantum::ops::ladder(-1, &p));
        assert_eq!(q.parts[1 << G_MID], crate::quantum::ops::ladder(0, &p));
        assert_eq!(q.parts[1 << G_UPPER], crate::quantum::ops::ladder(1, &p));
        for mask in [0b011, 0b101, 0b110, 0b111, 0b000] {
            assert!(q.parts[mask].is_zero());
        }
    }
}
