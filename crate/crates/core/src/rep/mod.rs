//! Representations of `SL(2)` / `GL(2)` built from a two-dimensional space
//! `U = <s, t>`: symmetric powers, `V_m = U ⊗ S_m`, their exterior and
//! symmetric squares, tensor products, torus characters and the
//! Clebsch–Gordan maps between them.
//!
//! `Λ²U` is trivialized by `s ∧ t` throughout, so it never appears as a
//! factor. A dual factor uses the same index set as the original with
//! negated weights, and the matrix of a dual map is the transpose.

mod cg;
mod character;
mod space;

pub use cg::{
    cg_beta, cg_beta_twisted, cg_mu, cg_mu_twisted, desym_sigma, permute_factors, sym_iota,
    v_multiply, wedge_projection,
};
pub use character::{Character, Decomposition};
pub use space::{
    sym_index, sym_pair, v_decode, v_index, wedge_index, wedge_pair, Factor, FactorKind,
    TensorSpace,
};

/// Builds the tensor space of an ordered factor list.
pub fn build_space(factors: &[Factor]) -> TensorSpace {
    TensorSpace::new(factors.to_vec())
}

/// Character of a tensor space (multiplicative over factors).
pub fn character(space: &TensorSpace) -> Character {
    space.character()
}

/// Irreducible decomposition of a character.
pub fn decompose_character(c: &Character) -> crate::Result<Decomposition> {
    c.decompose()
}
