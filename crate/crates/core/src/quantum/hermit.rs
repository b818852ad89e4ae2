//! Adjointness of the derivative pair under the Gaussian pairing.
//!
//! Normalizable states share a Gaussian ground factor.  Stripping it from
//! both sides of the inner product leaves polynomial states paired by
//! Wick moments of the squared weight — componentwise diagonal
//! factorials — while the raising component of the operator pair turns
//! into a bare derivative and its partner into a derivative plus a
//! doubled linear term.  In that frame the adjoint relation between the
//! two is a finite rational identity, checked here exactly with the
//! coupling kept as a formal power.  Sums weighted by any real diagonal
//! metric inherit the relation by linearity.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::poisson::GaussRat;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
struct CompMono {
    ze: Vec<u8>,
    zbe: Vec<u8>,
    kappa: i16,
}

/// Componentwise polynomial in the position components and their
/// conjugates, for a fixed number of components.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CompPoly {
    dim: usize,
    terms: BTreeMap<CompMono, GaussRat>,
}

impl CompPoly {
    pub fn zero(dim: usize) -> CompPoly {
        CompPoly {
            dim,
            terms: BTreeMap::new(),
        }
    }

    /// Monomial with the given componentwise exponents.
    pub fn monomial(ze: &[u8], zbe: &[u8]) -> CompPoly {
        assert_eq!(ze.len(), zbe.len());
        let mut p = CompPoly::zero(ze.len());
        p.push(
            CompMono {
                ze: ze.to_vec(),
                zbe: zbe.to_vec(),
                kappa: 0,
            },
            GaussRat::from_int(1),
        );
        p
    }

    pub fn one(dim: usize) -> CompPoly {
        CompPoly::monomial(&vec![0; dim], &vec![0; dim])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn push(&mut self, mono: CompMono, coeff: GaussRat) {
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

    pub fn scale(&self, c: &GaussRat) -> CompPoly {
        let mut out = CompPoly::zero(self.dim);
        for (m, q) in &self.terms {
            out.push(m.clone(), q.clone() * c.clone());
        }
        out
    }

    pub fn kappa_pow(&self, k: i16) -> CompPoly {
        let mut out = CompPoly::zero(self.dim);
        for (m, q) in &self.terms {
            let mut m2 = m.clone();
            m2.kappa += k;
            out.push(m2, q.clone());
        }
        out
    }

    /// Complex conjugate: swaps holomorphic and antiholomorphic
    /// exponents and conjugates coefficients.
    pub fn conj(&self) -> CompPoly {
        let mut out = CompPoly::zero(self.dim);
        for (m, q) in &self.terms {
            out.push(
                CompMono {
                    ze: m.zbe.clone(),
                    zbe: m.ze.clone(),
                    kappa: m.kappa,
                },
                q.conj(),
            );
        }
        out
    }

    fn derive(&self, mu: usize, bar: bool) -> CompPoly {
        let mut out = CompPoly::zero(self.dim);
        for (m, q) in &self.terms {
            let exp = if bar { m.zbe[mu] } else { m.ze[mu] };
            if exp == 0 {
                continue;
            }
            let mut m2 = m.clone();
            if bar {
                m2.zbe[mu] -= 1;
            } else {
                m2.ze[mu] -= 1;
            }
            out.push(m2, q.clone().times_int(i64::from(exp)));
        }
        out
    }

    fn times_component(&self, mu: usize, bar: bool) -> CompPoly {
        let mut out = CompPoly::zero(self.dim);
        for (m, q) in &self.terms {
            let mut m2 = m.clone();
            if bar {
                m2.zbe[mu] += 1;
            } else {
                m2.ze[mu] += 1;
            }
            out.push(m2, q.clone());
        }
        out
    }
}

impl Add for CompPoly {
    type Output = CompPoly;
    fn add(self, rhs: CompPoly) -> CompPoly {
        assert_eq!(self.dim, rhs.dim);
        let mut out = self;
        for (m, q) in rhs.terms {
            out.push(m, q);
        }
        out
    }
}

impl Sub for CompPoly {
    type Output = CompPoly;
    fn sub(self, rhs: CompPoly) -> CompPoly {
        self + (-rhs)
    }
}

impl Neg for CompPoly {
    type Output = CompPoly;
    fn neg(self) -> CompPoly {
        let mut out = CompPoly::zero(self.dim);
        for (m, q) in self.terms {
            out.push(m, -q);
        }
        out
    }
}

impl Mul for CompPoly {
    type Output = CompPoly;
    fn mul(self, rhs: CompPoly) -> CompPoly {
        assert_eq!(self.dim, rhs.dim);
        let mut out = CompPoly::zero(self.dim);
        for (ma, qa) in &self.terms {
            for (mb, qb) in &rhs.terms {
                let mono = CompMono {
                    ze: ma.ze.iter().zip(&mb.ze).map(|(x, y)| x + y).collect(),
                    zbe: ma.zbe.iter().zip(&mb.zbe).map(|(x, y)| x + y).collect(),
                    kappa: ma.kappa + mb.kappa,
                };
                out.push(mono, qa.clone() * qb.clone());
            }
        }
        out
    }
}

/// Component `mu` of the raising operator in the stripped frame: a bare
/// derivative times `-i`.
pub fn x_dressed(mu: usize, f: &CompPoly) -> CompPoly {
    f.derive(mu, false).scale(&GaussRat::imag(-1, 1))
}

/// Component `mu` of the partner operator in the stripped frame: `-i`
/// times the conjugate derivative plus twice the coupling times the
/// component.
pub fn y_dressed(mu: usize, f: &CompPoly) -> CompPoly {
    f.derive(mu, true).scale(&GaussRat::imag(-1, 1))
        + f.times_component(mu, false).kappa_pow(1).scale(&GaussRat::imag(2, 1))
}

fn factorial(n: u8) -> i64 {
    (1..=i64::from(n)).product()
}

/// Gaussian pairing of two states: the moment expectation of
/// `conj(f) * g`, returned as coefficients per power of the coupling.
/// Componentwise moments are diagonal, `<z^m zb^n> = [m == n] m! (2k)^-m`.
pub fn pair(f: &CompPoly, g: &CompPoly) -> BTreeMap<i16, GaussRat> {
    let prod = f.conj() * g.clone();
    let mut out: BTreeMap<i16, GaussRat> = BTreeMap::new();
    for (m, q) in &prod.terms {
        if m.ze != m.zbe {
            continue;
        }
        let mut weight = GaussRat::from_int(1);
        let mut total: i16 = 0;
        for &e in &m.ze {
            weight = weight * GaussRat::ratio(factorial(e), 1i64 << e);
            total += i16::from(e);
        }
        let power = m.kappa - total;
        let coeff = q.clone() * weight;
        match out.entry(power) {
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
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn battery(dim: usize) -> Vec<CompPoly> {
        let mut out = vec![CompPoly::one(dim)];
        for mu in 0..dim {
            let mut ze = vec![0u8; dim];
            ze[mu] = 1;
            out.push(CompPoly::monomial(&ze, &vec![0; dim]));
            out.push(CompPoly::monomial(&vec![0; dim], &ze));
            let mut both = vec![0u8; dim];
            both[mu] = 1;
            out.push(CompPoly::monomial(&both, &both));
        }
        let mut ze = vec![0u8; dim];
        ze[0] = 2;
        let mut zbe = vec![0u8; dim];
        zbe[dim - 1] = 1;
        out.push(CompPoly::monomial(&ze, &zbe));
        out.push(CompPoly::monomial(&ze, &vec![0; dim]).scale(&GaussRat::imag(1, 2)));
        out
    }

    #[test]
    fn moments_are_diagonal_factorials() {
        let dim = 2;
        let z0 = CompPoly::monomial(&[1, 0], &[0, 0]);
        let z0z0 = z0.clone() * z0.clone();
        // <z^2, z^2> = 2! (2k)^-2.
        let p = pair(&z0z0, &z0z0);
        assert_eq!(p.len(), 1);
        assert_eq!(p[&-2], GaussRat::ratio(1, 2));
        // Mismatched exponents integrate to zero.
        assert!(pair(&z0, &CompPoly::one(dim)).is_empty());
        let z0sq = z0.clone() * z0.clone();
        assert!(pair(&z0, &z0sq).is_empty());
    }

    #[test]
    fn derivative_components_are_mutually_adjoint() {
        for dim in 2..=4 {
            let states = battery(dim);
            for f in &states {
                for g in &states {
                    for mu in 0..dim {
                        assert_eq!(
                            pair(&x_dressed(mu, f), g),
                            pair(f, &y_dressed(mu, g)),
                            "component {mu} in dimension {dim}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn metric_weighted_squares_inherit_adjointness() {
        let dim = 4;
        let eta = [-1i64, 1, 1, 1];
        let states = battery(dim);
        let xx = |f: &CompPoly| {
            let mut acc = CompPoly::zero(dim);
            for mu in 0..dim {
                acc = acc + x_dressed(mu, &x_dressed(mu, f)).scale(&GaussRat::from_int(eta[mu]));
            }
            acc
        };
        let yy = |f: &CompPoly| {
            let mut acc = CompPoly::zero(dim);
            for mu in 0..dim {
                acc = acc + y_dressed(mu, &y_dressed(mu, f)).scale(&GaussRat::from_int(eta[mu]));
            }
            acc
        };
        for f in &states {
            for g in &states {
                assert_eq!(pair(&xx(f), g), pair(f, &yy(g)));
            }
        }
    }

    #[test]
    fn conjugation_is_an_involution_on_states() {
        for f in battery(3) {
            assert_eq!(f.conj().conj(), f);
        }
    }
}
