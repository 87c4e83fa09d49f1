//! Exact computer algebra for open topological-vertex partition functions of
//! toric Calabi-Yau strips.
//!
//! The crate is layered bottom-up:
//!
//! * [`scalars`]: rational functions in `t = q^{1/2}` with Laurent
//!   coefficients in `a`, a numeric-`q` variant, and truncated series in
//!   formal parameters.
//! * [`partitions`]: integer partitions with hooks, contents and `kappa`.
//! * [`symfunc`]: the ring of symmetric functions (Schur and power-sum bases),
//!   its tensor square, plethystic exponentials and principal specializations.
//! * [`skein`]: the skein of the solid torus modelled on symmetric functions,
//!   the skein dilogarithm and its recurrences.
//! * [`vertex`]: the topological vertex, strip gluing, the multiple-cover
//!   closed form and mirror curves.
//! * [`qdiff`]: the `U(1)` reduction and the quantum-curve annihilation check.
//! * [`report`]: JSON verification reports and coefficient tables.

pub mod partitions;
pub mod qdiff;
pub mod report;
pub mod scalars;
pub mod skein;
pub mod symfunc;
pub mod vertex;
