//! Exact multilinear algebra for the obstruction space `Ext²(E,E)` of special
//! symplectic instanton bundles on odd-dimensional projective space.
//!
//! Every linear map in the construction (Clebsch–Gordan maps, the special
//! monad maps `a` and `b`, the operator `Φ` and its dual, the comparison map
//! `ε`) is built as an [`ExactMatrix`] over the rationals, carrying the
//! tensor spaces it maps between. Ranks, kernels and weight characters are
//! then computed exactly.
//!
//! Module map:
//!
//! - [`exactla`]: rationals, sparse exact matrices, fraction-free and naive
//!   elimination, kernels, column-space membership.
//! - [`rep`]: `S_m`, `V_m = U ⊗ S_m`, `Λ²V_m`, `S²V_m`, tensor spaces with
//!   canonical bases, torus characters and Clebsch–Gordan maps.
//! - [`instanton_maps`]: the special monad, `Φ`, `Φ^∨`, `ε` and the
//!   structured reduction of `Ker Φ^∨` modulo `Im ε`.
//! - [`cohomology`]: closed dimension formulas, truncated Chern series and
//!   the assembled per-cell verification.
//! - [`cli`]: the `verify` / `table` / `decompose` front end.

pub mod cli;
pub mod cohomology;
pub mod error;
pub mod exactla;
pub mod instanton_maps;
pub mod rep;

pub use error::{Error, Result};
pub use exactla::{ExactMatrix, Rational};
pub use rep::{Character, Factor, TensorSpace};
