//! Polynomials over dot products of canonical vectors and lapse scalars.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::coeff::GaussRat;

/// Vector variables entering dot products.
///
/// `Aux1`/`Aux2` are inert constant directions used to express statements
/// about individual components: a componentwise identity holds exactly
/// when its contraction with arbitrary constant vectors does.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Vector {
    Pos,
    PosBar,
    Mom,
    MomBar,
    Aux1,
    Aux2,
}

const VECTORS: usize = 6;

/// Scalar variables: the complex lapse pair with conjugates and momenta,
/// the flow multipliers, and external parameter functions with their
/// explicit time derivatives.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Scalar {
    Lapse,
    LapseBar,
    LapseMom,
    LapseMomBar,
    Mult,
    MultBar,
    Eps,
    EpsBar,
    EpsZero,
    Shift,
    ShiftBar,
    EpsDot,
    EpsBarDot,
    EpsZeroDot,
    ShiftDot,
    ShiftBarDot,
}

const SCALARS: usize = 16;
const DOTS: usize = VECTORS * (VECTORS + 1) / 2;

impl Vector {
    fn idx(self) -> usize {
        match self {
            Vector::Pos => 0,
            Vector::PosBar => 1,
            Vector::Mom => 2,
            Vector::MomBar => 3,
            Vector::Aux1 => 4,
            Vector::Aux2 => 5,
        }
    }

    fn from_idx(i: usize) -> Vector {
        [Vector::Pos, Vector::PosBar, Vector::Mom, Vector::MomBar, Vector::Aux1, Vector::Aux2][i]
    }

    fn conj(self) -> Vector {
        match self {
            Vector::Pos => Vector::PosBar,
            Vector::PosBar => Vector::Pos,
            Vector::Mom => Vector::MomBar,
            Vector::MomBar => Vector::Mom,
            aux => aux,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Vector::Pos => "z",
            Vector::PosBar => "zb",
            Vector::Mom => "pi",
            Vector::MomBar => "pib",
            Vector::Aux1 => "a1",
            Vector::Aux2 => "a2",
        }
    }
}

impl Scalar {
    fn idx(self) -> usize {
        use Scalar::*;
        match self {
            Lapse => 0,
            LapseBar => 1,
            LapseMom => 2,
            LapseMomBar => 3,
            Mult => 4,
            MultBar => 5,
            Eps => 6,
            EpsBar => 7,
            EpsZero => 8,
            Shift => 9,
            ShiftBar => 10,
            EpsDot => 11,
            EpsBarDot => 12,
            EpsZeroDot => 13,
            ShiftDot => 14,
            ShiftBarDot => 15,
        }
    }

    fn from_idx(i: usize) -> Scalar {
        use Scalar::*;
        [
            Lapse, LapseBar, LapseMom, LapseMomBar, Mult, MultBar, Eps, EpsBar, EpsZero, Shift,
            ShiftBar, EpsDot, EpsBarDot, EpsZeroDot, ShiftDot, ShiftBarDot,
        ][i]
    }

    fn conj(self) -> Scalar {
        use Scalar::*;
        match self {
            Lapse => LapseBar,
            LapseBar => Lapse,
            LapseMom => LapseMomBar,
            LapseMomBar => LapseMom,
            Mult => MultBar,
            MultBar => Mult,
            Eps => EpsBar,
            EpsBar => Eps,
            Shift => ShiftBar,
            ShiftBar => Shift,
            EpsDot => EpsBarDot,
            EpsBarDot => EpsDot,
            ShiftDot => ShiftBarDot,
            ShiftBarDot => ShiftDot,
            real => real,
        }
    }

    /// Explicit time derivative of a parameter function, if it has one.
    fn dot(self) -> Option<Scalar> {
        use Scalar::*;
        match self {
            Eps => Some(EpsDot),
            EpsBar => Some(EpsBarDot),
            EpsZero => Some(EpsZeroDot),
            Shift => Some(ShiftDot),
            ShiftBar => Some(ShiftBarDot),
            _ => None,
        }
    }

    fn name(self) -> &'static str {
        use Scalar::*;
        match self {
            Lapse => "g",
            LapseBar => "gb",
            LapseMom => "pg",
            LapseMomBar => "pgb",
            Mult => "c",
            MultBar => "cb",
            Eps => "eps",
            EpsBar => "epsb",
            EpsZero => "eps0",
            Shift => "xi",
            ShiftBar => "xib",
            EpsDot => "eps'",
            EpsBarDot => "epsb'",
            EpsZeroDot => "eps0'",
            ShiftDot => "xi'",
            ShiftBarDot => "xib'",
        }
    }
}

/// Index of the unordered dot pair `{a, b}` in the triangular table.
fn pair_idx(a: Vector, b: Vector) -> usize {
    let (lo, hi) = if a.idx() <= b.idx() { (a.idx(), b.idx()) } else { (b.idx(), a.idx()) };
    lo * VECTORS - lo * (lo + 1) / 2 + hi
}

fn pair_from_idx(k: usize) -> (Vector, Vector) {
    let mut base = 0;
    for lo in 0..VECTORS {
        let row = VECTORS - lo;
        if k < base + row {
            return (Vector::from_idx(lo), Vector::from_idx(lo + k - base));
        }
        base += row;
    }
    unreachable!("dot index out of range");
}

/// Canonical pairing of the vector variables: `+1` when the first is a
/// position and the second its momentum, `-1` reversed, else zero.
fn omega(a: Vector, b: Vector) -> i64 {
    match (a, b) {
        (Vector::Pos, Vector::Mom) | (Vector::PosBar, Vector::MomBar) => 1,
        (Vector::Mom, Vector::Pos) | (Vector::MomBar, Vector::PosBar) => -1,
        _ => 0,
    }
}

/// Canonical pairing of the lapse scalars.
fn omega_scalar(a: Scalar, b: Scalar) -> i64 {
    match (a, b) {
        (Scalar::Lapse, Scalar::LapseMom) | (Scalar::LapseBar, Scalar::LapseMomBar) => 1,
        (Scalar::LapseMom, Scalar::Lapse) | (Scalar::LapseMomBar, Scalar::LapseBar) => -1,
        _ => 0,
    }
}

/// A product of dot powers, scalar powers, and a coupling power.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Monomial {
    dots: [u8; DOTS],
    scal: [u8; SCALARS],
    kappa: i16,
}

impl Monomial {
    fn one() -> Self {
        Monomial { dots: [0; DOTS], scal: [0; SCALARS], kappa: 0 }
    }

    fn merged(&self, other: &Monomial) -> Monomial {
        let mut out = self.clone();
        for (o, n) in out.dots.iter_mut().zip(other.dots) {
            *o += n;
        }
        for (o, n) in out.scal.iter_mut().zip(other.scal) {
            *o += n;
        }
        out.kappa += other.kappa;
        out
    }
}

/// Polynomial phase function: coefficient per monomial, zeros pruned.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct PhasePolynomial {
    terms: BTreeMap<Monomial, GaussRat>,
}

impl PhasePolynomial {
    pub fn zero() -> Self {
        PhasePolynomial::default()
    }

    pub fn constant(c: GaussRat) -> Self {
        let mut p = PhasePolynomial::zero();
        p.push(Monomial::one(), c);
        p
    }

    pub fn one() -> Self {
        PhasePolynomial::constant(GaussRat::from_int(1))
    }

    /// The dot product of two vector variables.
    pub fn dot(a: Vector, b: Vector) -> Self {
        let mut m = Monomial::one();
        m.dots[pair_idx(a, b)] = 1;
        let mut p = PhasePolynomial::zero();
        p.push(m, GaussRat::from_int(1));
        p
    }

    pub fn scalar(s: Scalar) -> Self {
        let mut m = Monomial::one();
        m.scal[s.idx()] = 1;
        let mut p = PhasePolynomial::zero();
        p.push(m, GaussRat::from_int(1));
        p
    }

    /// Seeded random polynomial over the canonical phase-space dots and
    /// the lapse sector, used to exercise the bracket axioms.
    pub fn random(rng: &mut impl rand::Rng, terms: usize) -> Self {
        let phase_dots = [
            pair_idx(Vector::Pos, Vector::Pos),
            pair_idx(Vector::Pos, Vector::PosBar),
            pair_idx(Vector::Pos, Vector::Mom),
            pair_idx(Vector::PosBar, Vector::MomBar),
            pair_idx(Vector::Mom, Vector::Mom),
            pair_idx(Vector::Mom, Vector::MomBar),
            pair_idx(Vector::PosBar, Vector::Mom),
        ];
        let scals = [
            Scalar::Lapse,
            Scalar::LapseMom,
            Scalar::LapseBar,
            Scalar::LapseMomBar,
        ];
        let mut p = PhasePolynomial::zero();
        for _ in 0..terms {
            let mut m = Monomial::one();
            for _ in 0..rng.random_range(0..=3) {
                m.dots[phase_dots[rng.random_range(0..phase_dots.len())]] += 1;
            }
            for _ in 0..rng.random_range(0..=2) {
                m.scal[scals[rng.random_range(0..scals.len())].idx()] += 1;
            }
            m.kappa = rng.random_range(-1..=1);
            let c = GaussRat::from_int(rng.random_range(-3..=3))
                + GaussRat::imag(rng.random_range(-3..=3), 1);
            p.push(m, c);
        }
        p
    }

    /// Multiply by an integer power of the coupling.
    pub fn kappa_pow(&self, k: i16) -> Self {
        let mut out = PhasePolynomial::zero();
        for (m, c) in &self.terms {
            let mut m = m.clone();
            m.kappa += k;
            out.push(m, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &GaussRat) -> Self {
        let mut out = PhasePolynomial::zero();
        for (m, v) in &self.terms {
            out.push(m.clone(), v.clone() * c.clone());
        }
        out
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

    /// Complex conjugate: swaps every variable with its partner and
    /// conjugates the coefficients; the coupling stays real.
    pub fn conj(&self) -> Self {
        let mut out = PhasePolynomial::zero();
        for (m, c) in &self.terms {
            let mut nm = Monomial::one();
            nm.kappa = m.kappa;
            for (k, &e) in m.dots.iter().enumerate() {
                if e > 0 {
                    let (a, b) = pair_from_idx(k);
                    nm.dots[pair_idx(a.conj(), b.conj())] += e;
                }
            }
            for (k, &e) in m.scal.iter().enumerate() {
                if e > 0 {
                    nm.scal[Scalar::from_idx(k).conj().idx()] += e;
                }
            }
            out.push(nm, c.conj());
        }
        out
    }

    /// Drop every monomial containing a lapse momentum: the quotient by
    /// the primary constraints.
    pub fn without_lapse_momenta(&self) -> Self {
        let mut out = PhasePolynomial::zero();
        for (m, c) in &self.terms {
            if m.scal[Scalar::LapseMom.idx()] == 0 && m.scal[Scalar::LapseMomBar.idx()] == 0 {
                out.push(m.clone(), c.clone());
            }
        }
        out
    }

    fn push(&mut self, m: Monomial, c: GaussRat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }
}

impl Add for PhasePolynomial {
    type Output = PhasePolynomial;
    fn add(self, rhs: PhasePolynomial) -> PhasePolynomial {
        let mut out = self;
        for (m, c) in rhs.terms {
            out.push(m, c);
        }
        out
    }
}

impl Sub for PhasePolynomial {
    type Output = PhasePolynomial;
    fn sub(self, rhs: PhasePolynomial) -> PhasePolynomial {
        let mut out = self;
        for (m, c) in rhs.terms {
            out.push(m, -c);
        }
        out
    }
}

impl Neg for PhasePolynomial {
    type Output = PhasePolynomial;
    fn neg(self) -> PhasePolynomial {
        let mut out = PhasePolynomial::zero();
        for (m, c) in self.terms {
            out.push(m, -c);
        }
        out
    }
}

impl Mul for PhasePolynomial {
    type Output = PhasePolynomial;
    fn mul(self, rhs: PhasePolynomial) -> PhasePolynomial {
        let mut out = PhasePolynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.push(ma.merged(mb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

/// Elementary bracket of two dot products as `(coefficient, result pair)`
/// terms: each slot of the first dot pairs canonically with each slot of
/// the second, leaving the dot of the two spectator slots.
fn elementary(first: usize, second: usize) -> Vec<(i64, usize)> {
    let (a, b) = pair_from_idx(first);
    let (c, d) = pair_from_idx(second);
    let mut out = Vec::new();
    for (x, spec_x) in [(a, b), (b, a)] {
        for (y, spec_y) in [(c, d), (d, c)] {
            let w = omega(x, y);
            if w != 0 {
                out.push((w, pair_idx(spec_x, spec_y)));
            }
        }
    }
    out
}

/// Canonical bracket of two phase polynomials, exactly.
pub fn bracket(p: &PhasePolynomial, q: &PhasePolynomial) -> PhasePolynomial {
    let mut out = PhasePolynomial::zero();
    for (mp, cp) in &p.terms {
        for (mq, cq) in &q.terms {
            let weight = cp.clone() * cq.clone();
            // Dot-sector derivations.
            for (i, &ei) in mp.dots.iter().enumerate() {
                if ei == 0 {
                    continue;
                }
                for (j, &ej) in mq.dots.iter().enumerate() {
                    if ej == 0 {
                        continue;
                    }
                    for (coef, k) in elementary(i, j) {
                        let mut mi = mp.clone();
                        mi.dots[i] -= 1;
                        let mut mj = mq.clone();
                        mj.dots[j] -= 1;
                        let mut m = mi.merged(&mj);
                        m.dots[k] += 1;
                        out.push(
                            m,
                            weight.clone().times_int(coef * i64::from(ei) * i64::from(ej)),
                        );
                    }
                }
            }
            // Lapse-sector derivations.
            for (i, &ei) in mp.scal.iter().enumerate() {
                if ei == 0 {
                    continue;
                }
                for (j, &ej) in mq.scal.iter().enumerate() {
                    if ej == 0 {
                        continue;
                    }
                    let w = omega_scalar(Scalar::from_idx(i), Scalar::from_idx(j));
                    if w == 0 {
                        continue;
                    }
                    let mut mi = mp.clone();
                    mi.scal[i] -= 1;
                    let mut mj = mq.clone();
                    mj.scal[j] -= 1;
                    out.push(
                        mi.merged(&mj),
                        weight.clone().times_int(w * i64::from(ei) * i64::from(ej)),
                    );
                }
            }
        }
    }
    out
}

/// Explicit time derivative: differentiates the parameter functions by the
/// product rule and leaves every phase-space variable alone.
pub fn time_derivative(p: &PhasePolynomial) -> PhasePolynomial {
    let mut out = PhasePolynomial::zero();
    for (m, c) in &p.terms {
        for (k, &e) in m.scal.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if let Some(d) = Scalar::from_idx(k).dot() {
                let mut nm = m.clone();
                nm.scal[k] -= 1;
                nm.scal[d.idx()] += 1;
                out.push(nm, c.clone().times_int(i64::from(e)));
            }
        }
    }
    out
}

impl fmt::Display for PhasePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            if m.kappa != 0 {
                write!(f, " k^{}", m.kappa)?;
            }
            for (k, &e) in m.scal.iter().enumerate() {
                if e > 0 {
                    write!(f, " {}", Scalar::from_idx(k).name())?;
                    if e > 1 {
                        write!(f, "^{e}")?;
                    }
                }
            }
            for (k, &e) in m.dots.iter().enumerate() {
                if e > 0 {
                    let (a, b) = pair_from_idx(k);
                    write!(f, " ({}.{})", a.name(), b.name())?;
                    if e > 1 {
                        write!(f, "^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
