//! Exact canonical bracket algebra of the constrained phase space.
//!
//! Phase functions are represented as polynomials in dot products of the
//! canonical vectors (position, momentum, their conjugates, and two inert
//! auxiliary directions), scalar lapse variables with their momenta, and
//! external parameter functions, all over Gaussian rational coefficients
//! with an integer power of the coupling.  The bracket is evaluated
//! symbolically, so every algebra identity in this layer is checked to
//! equality of coefficient maps — no floating point is involved.

mod coeff;
mod constraints;
mod poly;

pub use coeff::GaussRat;
pub use constraints::{
    chi, chi_bar, chi_zero, defect_decomposition, gauge_generator, generator_defect, hamiltonian,
    lapse_momentum, lapse_momentum_bar, momentum_dot, momentum_dot_bar, sl2,
};
pub use poly::{bracket, time_derivative, PhasePolynomial, Scalar, Vector};
