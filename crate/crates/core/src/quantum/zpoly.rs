//! Exact polynomials in the complex position and inert directions.
//!
//! A monomial is a product of Lorentz dots between five symbols — the
//! position, its conjugate, and three constant directions — times formal
//! powers of the ordering parameter, the dimension, and the coupling.
//! Derivatives act only through the position pair; contracting two
//! derivatives across the same dot produces a dimension trace, which is
//! why the dimension has to stay symbolic.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::poisson::GaussRat;

/// Vector symbols a dot product can mention.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ZVar {
    /// Complex position.
    Pos,
    /// Conjugate position.
    PosBar,
    /// First inert direction.
    Dir1,
    /// Second inert direction.
    Dir2,
    /// Third inert direction.
    Dir3,
}

const VECS: usize = 5;
const DOTS: usize = VECS * (VECS + 1) / 2;

impl ZVar {
    fn idx(self) -> usize {
        match self {
            ZVar::Pos => 0,
            ZVar::PosBar => 1,
            ZVar::Dir1 => 2,
            ZVar::Dir2 => 3,
            ZVar::Dir3 => 4,
        }
    }

    fn from_idx(i: usize) -> ZVar {
        [ZVar::Pos, ZVar::PosBar, ZVar::Dir1, ZVar::Dir2, ZVar::Dir3][i]
    }

    fn name(self) -> &'static str {
        match self {
            ZVar::Pos => "z",
            ZVar::PosBar => "zb",
            ZVar::Dir1 => "e1",
            ZVar::Dir2 => "e2",
            ZVar::Dir3 => "e3",
        }
    }
}

fn pair_idx(x: ZVar, y: ZVar) -> usize {
    let (lo, hi) = if x.idx() <= y.idx() {
        (x.idx(), y.idx())
    } else {
        (y.idx(), x.idx())
    };
    lo * VECS - lo * (lo + 1) / 2 + hi
}

fn pair_from_idx(k: usize) -> (ZVar, ZVar) {
    let mut rest = k;
    for lo in 0..VECS {
        let row = VECS - lo;
        if rest < row {
            return (ZVar::from_idx(lo), ZVar::from_idx(lo + rest));
        }
        rest -= row;
    }
    unreachable!("pair index out of range");
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
struct ZMono {
    dots: [u8; DOTS],
    alpha: u8,
    dim: u8,
    kappa: i16,
}

impl ZMono {
    fn one() -> ZMono {
        ZMono {
            dots: [0; DOTS],
            alpha: 0,
            dim: 0,
            kappa: 0,
        }
    }

    fn merged(&self, other: &ZMono) -> ZMono {
        let mut dots = self.dots;
        for (d, o) in dots.iter_mut().zip(other.dots.iter()) {
            *d += o;
        }
        ZMono {
            dots,
            alpha: self.alpha + other.alpha,
            dim: self.dim + other.dim,
            kappa: self.kappa + other.kappa,
        }
    }
}

/// Polynomial with Gaussian-rational coefficients over [`ZMono`] monomials.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ZPoly {
    terms: BTreeMap<ZMono, GaussRat>,
}

impl ZPoly {
    pub fn zero() -> ZPoly {
        ZPoly::default()
    }

    pub fn constant(c: GaussRat) -> ZPoly {
        let mut p = ZPoly::zero();
        p.push(ZMono::one(), c);
        p
    }

    pub fn one() -> ZPoly {
        ZPoly::constant(GaussRat::from_int(1))
    }

    /// Single dot product of two vector symbols.
    pub fn dot(a: ZVar, b: ZVar) -> ZPoly {
        let mut m = ZMono::one();
        m.dots[pair_idx(a, b)] = 1;
        let mut p = ZPoly::zero();
        p.push(m, GaussRat::from_int(1));
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn push(&mut self, mono: ZMono, coeff: GaussRat) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                let sum = slot.get().clone() + coeff;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &GaussRat) -> ZPoly {
        let mut out = ZPoly::zero();
        for (m, q) in &self.terms {
            out.push(m.clone(), q.clone() * c.clone());
        }
        out
    }

    /// Multiply by an integer power of the coupling.
    pub fn kappa_pow(&self, k: i16) -> ZPoly {
        let mut out = ZPoly::zero();
        for (m, q) in &self.terms {
            let mut m2 = m.clone();
            m2.kappa += k;
            out.push(m2, q.clone());
        }
        out
    }

    /// Multiply by the ordering parameter.
    pub fn times_alpha(&self) -> ZPoly {
        let mut out = ZPoly::zero();
        for (m, q) in &self.terms {
            let mut m2 = m.clone();
            m2.alpha += 1;
            out.push(m2, q.clone());
        }
        out
    }

    /// Multiply by the dimension symbol.
    pub fn times_dim(&self) -> ZPoly {
        let mut out = ZPoly::zero();
        for (m, q) in &self.terms {
            let mut m2 = m.clone();
            m2.dim += 1;
            out.push(m2, q.clone());
        }
        out
    }

    /// Directional first derivative `v . d/dw`, where `w` names the
    /// position or its conjugate and `v` is any of the five symbols.
    pub fn contract(&self, v: ZVar, w: ZVar) -> ZPoly {
        assert!(
            matches!(w, ZVar::Pos | ZVar::PosBar),
            "derivatives act only on the position pair"
        );
        let mut out = ZPoly::zero();
        for (m, q) in &self.terms {
            for d in 0..DOTS {
                if m.dots[d] == 0 {
                    continue;
                }
                let (a, b) = pair_from_idx(d);
                for (slot, partner) in [(a, b), (b, a)] {
                    if slot != w {
                        continue;
                    }
                    let mut m2 = m.clone();
                    m2.dots[d] -= 1;
                    m2.dots[pair_idx(v, partner)] += 1;
                    out.push(m2, q.clone().times_int(i64::from(m.dots[d])));
                }
            }
        }
        out
    }

    /// Contracted second derivative `(d/dw1) . (d/dw2)`.  Both slots must
    /// name the position or its conjugate; hitting both ends of one dot
    /// yields a dimension trace.
    pub fn second(&self, w1: ZVar, w2: ZVar) -> ZPoly {
        assert!(matches!(w1, ZVar::Pos | ZVar::PosBar));
        assert!(matches!(w2, ZVar::Pos | ZVar::PosBar));
        let mut out = ZPoly::zero();
        for (m, q) in &self.terms {
            for d1 in 0..DOTS {
                if m.dots[d1] == 0 {
                    continue;
                }
                let e1 = i64::from(m.dots[d1]);
                let (a, b) = pair_from_idx(d1);
                for (slot, partner) in [(a, b), (b, a)] {
                    if slot != w1 {
                        continue;
                    }
                    let mut m1 = m.clone();
                    m1.dots[d1] -= 1;
                    if partner == w2 {
                        let mut mt = m1.clone();
                        mt.dim += 1;
                        out.push(mt, q.clone().times_int(e1));
                    }
                    for d2 in 0..DOTS {
                        if m1.dots[d2] == 0 {
                            continue;
                        }
                        let e2 = i64::from(m1.dots[d2]);
                        let (c, dd) = pair_from_idx(d2);
                        for (slot2, partner2) in [(c, dd), (dd, c)] {
                            if slot2 != w2 {
                                continue;
                            }
                            let mut m2 = m1.clone();
                            m2.dots[d2] -= 1;
                            m2.dots[pair_idx(partner, partner2)] += 1;
                            out.push(m2, q.clone().times_int(e1 * e2));
                        }
                    }
                }
            }
        }
        out
    }

    /// Replace every power of the ordering parameter by a quarter of the
    /// dimension, so each `a^j D^k` term becomes `4^-j D^(j+k)`.  Terms
    /// that cancel after the substitution disappear from the map.
    pub fn map_alpha_to_quarter_dim(&self) -> ZPoly {
        let mut out = ZPoly::zero();
        for (m, q) in &self.terms {
            let mut m2 = m.clone();
            let a = m2.alpha;
            m2.alpha = 0;
            m2.dim += a;
            let mut c = q.clone();
            for _ in 0..a {
                c = c * GaussRat::ratio(1, 4);
            }
            out.push(m2, c);
        }
        out
    }

    /// All dot monomials of total degree at most `deg` over the first
    /// `vars` vector symbols, with unit coefficient and no parameter
    /// powers.  Used as a spanning family in operator-identity tests.
    pub fn basis(vars: usize, deg: u8) -> Vec<ZPoly> {
        assert!(vars >= 2 && vars <= VECS);
        let usable: Vec<usize> = (0..DOTS)
            .filter(|&k| {
                let (a, b) = pair_from_idx(k);
                a.idx() < vars && b.idx() < vars
            })
            .collect();
        let mut out = Vec::new();
        let mut stack = vec![(ZMono::one(), 0usize, 0u8)];
        while let Some((mono, from, used)) = stack.pop() {
            let mut p = ZPoly::zero();
            p.push(mono.clone(), GaussRat::from_int(1));
            out.push(p);
            if used == deg {
                continue;
            }
            for (pos, &d) in usable.iter().enumerate().skip(from) {
                let mut m2 = mono.clone();
                m2.dots[d] += 1;
                stack.push((m2, pos, used + 1));
            }
        }
        out
    }
}

impl Add for ZPoly {
    type Output = ZPoly;
    fn add(self, rhs: ZPoly) -> ZPoly {
        let mut out = self;
        for (m, q) in rhs.terms {
            out.push(m, q);
        }
        out
    }
}

impl Sub for ZPoly {
    type Output = ZPoly;
    fn sub(self, rhs: ZPoly) -> ZPoly {
        self + (-rhs)
    }
}

impl Neg for ZPoly {
    type Output = ZPoly;
    fn neg(self) -> ZPoly {
        let mut out = ZPoly::zero();
        for (m, q) in self.terms {
            out.push(m, -q);
        }
        out
    }
}

impl Mul for ZPoly {
    type Output = ZPoly;
    fn mul(self, rhs: ZPoly) -> ZPoly {
        let mut out = ZPoly::zero();
        for (ma, qa) in &self.terms {
            for (mb, qb) in &rhs.terms {
                out.push(ma.merged(mb), qa.clone() * qb.clone());
            }
        }
        out
    }
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, q) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({q})")?;
            if m.alpha > 0 {
                write!(f, " a^{}", m.alpha)?;
            }
            if m.dim > 0 {
                write!(f, " D^{}", m.dim)?;
            }
            if m.kappa != 0 {
                write!(f, " k^{}", m.kappa)?;
            }
            for d in 0..DOTS {
                if m.dots[d] > 0 {
                    let (a, b) = pair_from_idx(d);
                    write!(f, " ({}.{})^{}", a.name(), b.name(), m.dots[d])?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_table_roundtrips() {
        for k in 0..DOTS {
            let (a, b) = pair_from_idx(k);
            assert_eq!(pair_idx(a, b), k);
            assert_eq!(pair_idx(b, a), k);
        }
    }

    #[test]
    fn contraction_counts_position_slots() {
        let zz = ZPoly::dot(ZVar::Pos, ZVar::Pos);
        let ze = ZPoly::dot(ZVar::Pos, ZVar::Dir1);
        // z.d/dz acts as a degree counter.
        assert_eq!(zz.contract(ZVar::Pos, ZVar::Pos), zz.scale(&GaussRat::from_int(2)));
        assert_eq!(ze.contract(ZVar::Pos, ZVar::Pos), ze.clone());
        // zb.d/dz swaps one slot.
        assert_eq!(
            zz.contract(ZVar::PosBar, ZVar::Pos),
            ZPoly::dot(ZVar::Pos, ZVar::PosBar).scale(&GaussRat::from_int(2))
        );
        assert!(ze.contract(ZVar::Dir2, ZVar::PosBar).is_zero());
    }

    #[test]
    fn second_derivative_produces_dimension_traces() {
        let zz = ZPoly::dot(ZVar::Pos, ZVar::Pos);
        let zzb = ZPoly::dot(ZVar::Pos, ZVar::PosBar);
        // Box of z.z is twice the dimension.
        assert_eq!(
            zz.second(ZVar::Pos, ZVar::Pos),
            ZPoly::one().times_dim().scale(&GaussRat::from_int(2))
        );
        // Mixed second derivative of z.zb is a single trace.
        assert_eq!(zzb.second(ZVar::Pos, ZVar::PosBar), ZPoly::one().times_dim());
        // Box of (z.z)^2 keeps a dot behind.
        let zz2 = zz.clone() * zz.clone();
        let expect = zz.times_dim().scale(&GaussRat::from_int(4))
            + zz.scale(&GaussRat::from_int(8));
        assert_eq!(zz2.second(ZVar::Pos, ZVar::Pos), expect);
    }

    #[test]
    fn mixed_second_derivatives_commute() {
        for f in ZPoly::basis(4, 3) {
            assert_eq!(f.second(ZVar::Pos, ZVar::PosBar), f.second(ZVar::PosBar, ZVar::Pos));
        }
    }

    #[test]
    fn basis_enumeration_has_the_expected_size() {
        // Ten dot symbols over four vectors: multisets of size <= 3.
        assert_eq!(ZPoly::basis(4, 3).len(), 1 + 10 + 55 + 220);
        // Fifteen dot symbols over five vectors: multisets of size <= 2.
        assert_eq!(ZPoly::basis(5, 2).len(), 1 + 15 + 120);
    }
}
