//! Matrices attached to special symplectic instanton bundles: the monad
//! maps `a` and `b`, the map `Φ` computing `Ext²(E, E)`, and the map `ε`
//! spanning `ker Φ^∨`.

mod monad;
mod phi;
mod reduction;

use serde::Serialize;

use crate::error::Result;
use crate::rep::{Character, Factor, TensorSpace};

pub use monad::{
    alpha_len, annihilator, catalecticant, contraction, curve_parameters, curve_point,
    fiber_check_a, fiber_check_b, induced_b, kappa, kappa_dual, monad_complex_check, monad_dims,
    random_point, sample_fibers, special_a, special_b, FiberReport, FiberSampling, MonadMatrices,
    MonadSpec,
};
pub use phi::{
    epsilon, epsilon_prime, epsilon_prime_via_beta, mixed_wedge_coefficient, mixed_wedge_row, phi,
    phi_dual_domain, phi_dual_explicit, MixedCoefficientForm,
};
pub use reduction::{
    check_leading_term, reduce_mod_epsilon, reduce_with, CoefficientIndex, ReductionCertificate,
    ReductionStep,
};

/// Character of `S_{k-3} ⊗ S_{k-3} ⊗ S²V_{n-2}`, the expected `Ext²`.
pub fn expected_ext2_character(n: i64, k: i64) -> Character {
    TensorSpace::new(vec![Factor::s(k - 3), Factor::s(k - 3), Factor::sym2_v(n - 2)]).character()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharacterCheck {
    pub kernel: String,
    pub expected: String,
    pub matches: bool,
}

/// Compares the torus character of `ker Φ^∨` (computed weight block by
/// weight block) with that of `S_{k-3} ⊗ S_{k-3} ⊗ S²V_{n-2}`.
pub fn ext2_character_check(n: i64, k: i64) -> Result<CharacterCheck> {
    let kernel = phi_dual_explicit(k, n).kernel_character()?;
    let expected = expected_ext2_character(n, k);
    Ok(CharacterCheck {
        kernel: kernel.to_string(),
        expected: expected.to_string(),
        matches: kernel == expected,
    })
}
