//! Operator algebra of the quantized model.
//!
//! The wave-function layer works with polynomials in the complex position,
//! its conjugate, and up to three inert directions; coefficients carry
//! separate formal powers of the ordering parameter, the dimension, and
//! the coupling, so operator identities are established identically in all
//! three rather than at sampled values.  On top sit the three quadratic
//! operators and their ghost extension, whose squared charge isolates the
//! ordering anomaly; a Gaussian-frame pairing checks which operator is
//! whose adjoint; and a numeric layer evaluates the distinguished solution
//! in four dimensions.

mod ghost;
mod hermit;
mod ops;
mod physical;
mod zpoly;

pub use ghost::{brst_apply, central_defect, substitute_balanced, BrstState};
pub use hermit::{pair, x_dressed, y_dressed, CompPoly};
pub use ops::{
    balanced_alpha, ladder, ordering_constant, x_dot_y, x_square, y_dot_x, y_square,
};
pub use physical::{physical_residuals, PhysicalConfig, PhysicalResiduals};
pub use zpoly::{ZPoly, ZVar};
