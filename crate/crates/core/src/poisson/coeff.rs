//! Gaussian rational coefficients: exact complex numbers `re + im i` with
//! rational parts.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GaussRat {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussRat {
    pub fn zero() -> Self {
        GaussRat::default()
    }

    pub fn from_int(n: i64) -> Self {
        GaussRat { re: BigRational::from_integer(BigInt::from(n)), im: BigRational::zero() }
    }

    /// The rational `n / d`.
    pub fn ratio(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        GaussRat {
            re: BigRational::new(BigInt::from(n), BigInt::from(d)),
            im: BigRational::zero(),
        }
    }

    /// The imaginary rational `(n / d) i`.
    pub fn imag(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        GaussRat {
            re: BigRational::zero(),
            im: BigRational::new(BigInt::from(n), BigInt::from(d)),
        }
    }

    pub fn i() -> Self {
        GaussRat::imag(1, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRat { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn times_int(&self, n: i64) -> Self {
        let f = BigRational::from_integer(BigInt::from(n));
        GaussRat { re: &self.re * &f, im: &self.im * &f }
    }
}

impl Add for GaussRat {
    type Output = GaussRat;
    fn add(self, rhs: GaussRat) -> GaussRat {
        GaussRat { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl AddAssign for GaussRat {
    fn add_assign(&mut self, rhs: GaussRat) {
        self.re += rhs.re;
        self.im += rhs.im;
    }
}

impl Sub for GaussRat {
    type Output = GaussRat;
    fn sub(self, rhs: GaussRat) -> GaussRat {
        GaussRat { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat { re: -self.re, im: -self.im }
    }
}

impl Mul for GaussRat {
    type Output = GaussRat;
    fn mul(self, rhs: GaussRat) -> GaussRat {
        GaussRat {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut lead = true;
        if !self.re.is_zero() {
            write!(f, "{}", self.re)?;
            lead = false;
        }
        if !self.im.is_zero() {
            if !lead && self.im >= BigRational::zero() {
                write!(f, "+")?;
            }
            write!(f, "{}i", self.im)?;
        }
        Ok(())
    }
}
