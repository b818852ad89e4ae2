//! Verification engine for a constrained complex particle model.
//!
//! The crate covers five layers that build on each other:
//!
//! * flat metrics of either signature and second order forward-mode jets
//!   ([`metric`], [`jet`]),
//! * generalized polar charts on the definite and indefinite quadric
//!   domains, with exact inverse maps ([`coords`]),
//! * the quadratic invariant operator in three independent realizations:
//!   a closed Cartesian form, a generator-sum form, and a chart form
//!   ([`lbop`]),
//! * separated eigenfunctions, admissibility filters, and the exact
//!   integer scan for distinguished dimensions ([`spectrum`]),
//! * constrained dynamics of the model together with its exact bracket
//!   algebra, quantum operator algebra, and number-valued checks of the
//!   physical state construction ([`dynamics`], [`poisson`], [`quantum`]).
//!
//! Every numeric claim is exercised twice: once through the implementation
//! under test and once through an independent oracle (finite differences,
//! generator sums, exact rational algebra).  The [`suites`] module bundles
//! those checks into reproducible, seedable reports.

pub mod coords;
pub mod dynamics;
pub mod jet;
pub mod lbop;
pub mod metric;
pub mod poisson;
pub mod quad;
pub mod quantum;
pub mod report;
pub mod sample;
pub mod spectrum;
pub mod suites;
