//! The map `Φ` whose cokernel (through `Φ^∨`'s kernel) computes `Ext²`, and
//! the map `ε` whose image is the whole kernel of `Φ^∨`.

use num_traits::Zero;

use crate::exactla::{rat, ExactMatrix, Rational};
use crate::rep::{
    cg_beta_twisted, desym_sigma, permute_factors, sym_iota, v_decode, v_index, wedge_index,
    Factor, TensorSpace,
};

use super::monad::special_b;

/// `Φ: (S_{k-1} ⊗ S_{k-1} ⊗ Λ²V_n)^∨ → (S_{k-2} ⊗ S_{k-2} ⊗ V_{n-1} ⊗ V_{n-1})^∨`
/// assembled as `(b ⊗ b)` applied after desymmetrizing `Λ²V^∨_n`, with the
/// factors shuffled into place on either side.
pub fn phi(k: i64, n: i64) -> ExactMatrix {
    let b = special_b(k, n);
    let bb = b.kron(&b);
    let outer = TensorSpace::new(vec![Factor::s(k - 1).dual(), Factor::s(k - 1).dual()]);
    let lift = ExactMatrix::identity(outer).kron(&desym_sigma(n, true));
    let p_in = permute_factors(lift.codomain(), &[0, 2, 1, 3]);
    let p_out = permute_factors(bb.codomain(), &[0, 2, 1, 3]);
    let inner = p_in.compose(&lift).expect("shuffle after lift");
    let inner = bb.compose(&inner).expect("b ⊗ b after shuffle");
    p_out.compose(&inner).expect("shuffle after b ⊗ b")
}

/// `v ⊗ v' ↦ v ∧ v'` in wedge coordinates: `(index, sign)`, or `None` when
/// `v = v'`.
fn wedge_of(vd: usize, i: usize, j: usize) -> Option<(usize, i64)> {
    match i.cmp(&j) {
        std::cmp::Ordering::Less => Some((wedge_index(vd, i, j), 1)),
        std::cmp::Ordering::Greater => Some((wedge_index(vd, j, i), -1)),
        std::cmp::Ordering::Equal => None,
    }
}

/// `Φ^∨` written out on basis vectors:
/// `g ⊗ g' ⊗ v ⊗ v' ↦ sg⊗sg'⊗tv∧tv' − sg⊗tg'⊗tv∧sv' − tg⊗sg'⊗sv∧tv' + tg⊗tg'⊗sv∧sv'`.
pub fn phi_dual_explicit(k: i64, n: i64) -> ExactMatrix {
    let dom = TensorSpace::new(vec![
        Factor::s(k - 2),
        Factor::s(k - 2),
        Factor::v(n - 1),
        Factor::v(n - 1),
    ]);
    let cod = TensorSpace::new(vec![Factor::s(k - 1), Factor::s(k - 1), Factor::wedge2_v(n)]);
    let vd = Factor::v(n).dim();
    let mut entries = Vec::new();
    for col in 0..dom.dim() {
        let p = dom.decompose(col);
        let (g, g2) = (p[0], p[1]);
        let (bar, mu) = v_decode(n - 1, p[2]);
        let (bar2, nu) = v_decode(n - 1, p[3]);
        for (x, y, sign) in [(0, 0, 1), (0, 1, -1), (1, 0, -1), (1, 1, 1)] {
            // x = 0: s·g and t·v; x = 1: t·g and s·v
            let v = v_index(n, bar, mu + 1 - x);
            let v2 = v_index(n, bar2, nu + 1 - y);
            if let Some((w, s)) = wedge_of(vd, v, v2) {
                entries.push((cod.index(&[g + x, g2 + y, w]), col, rat(sign * s)));
            }
        }
    }
    ExactMatrix::from_entries(dom, cod, entries)
}

fn epsilon_prime_domain(k: i64, n: i64) -> TensorSpace {
    TensorSpace::new(vec![
        Factor::s(k - 3),
        Factor::s(k - 3),
        Factor::v(n - 2),
        Factor::v(n - 2),
    ])
}

/// `Φ^∨`'s domain, which is also the codomain of `ε` and `ε'`.
pub fn phi_dual_domain(k: i64, n: i64) -> TensorSpace {
    TensorSpace::new(vec![
        Factor::s(k - 2),
        Factor::s(k - 2),
        Factor::v(n - 1),
        Factor::v(n - 1),
    ])
}

/// `ε': S_{k-3} ⊗ S_{k-3} ⊗ V_{n-2} ⊗ V_{n-2} → S_{k-2} ⊗ S_{k-2} ⊗ V_{n-1} ⊗ V_{n-1}`,
/// `f⊗f'⊗u⊗u' ↦ sf⊗sf'⊗tu⊗tu' − sf⊗tf'⊗su⊗tu' − tf⊗sf'⊗tu⊗su' + tf⊗tf'⊗su⊗su'`.
///
/// Note the pairing: the `U`-letter applied to `u` is opposite to the one
/// applied to `f'`, i.e. `ε' = β(f ⊗ u') ⊗ β(f' ⊗ u)` up to reordering.
pub fn epsilon_prime(k: i64, n: i64) -> ExactMatrix {
    let dom = epsilon_prime_domain(k, n);
    let cod = phi_dual_domain(k, n);
    let mut entries = Vec::new();
    for col in 0..dom.dim() {
        let p = dom.decompose(col);
        let (f, f2) = (p[0], p[1]);
        let (bar, mu) = v_decode(n - 2, p[2]);
        let (bar2, nu) = v_decode(n - 2, p[3]);
        for (x, y, sign) in [(0, 0, 1), (0, 1, -1), (1, 0, -1), (1, 1, 1)] {
            let u = v_index(n - 1, bar, mu + 1 - y);
            let u2 = v_index(n - 1, bar2, nu + 1 - x);
            entries.push((cod.index(&[f + x, f2 + y, u, u2]), col, rat(sign)));
        }
    }
    ExactMatrix::from_entries(dom, cod, entries)
}

/// `ε'` assembled from two copies of the twisted Clebsch–Gordan map
/// `S_{k-3} ⊗ V_{n-2} → S_{k-2} ⊗ V_{n-1}`, as an independent cross-check
/// of [`epsilon_prime`].
pub fn epsilon_prime_via_beta(k: i64, n: i64) -> ExactMatrix {
    let beta = cg_beta_twisted(k - 2, n - 1);
    let p_in = permute_factors(&epsilon_prime_domain(k, n), &[0, 3, 1, 2]);
    let bb = beta.kron(&beta);
    let p_out = permute_factors(bb.codomain(), &[0, 2, 3, 1]);
    let inner = bb.compose(&p_in).expect("β ⊗ β after shuffle");
    p_out.compose(&inner).expect("shuffle after β ⊗ β")
}

/// `ε = ε' ∘ (id ⊗ id ⊗ ι)` on `S_{k-3} ⊗ S_{k-3} ⊗ S²V_{n-2}`.
pub fn epsilon(k: i64, n: i64) -> ExactMatrix {
    let outer = TensorSpace::new(vec![Factor::s(k - 3), Factor::s(k - 3)]);
    let lift = ExactMatrix::identity(outer).kron(&sym_iota(n - 2));
    epsilon_prime(k, n).compose(&lift).expect("ε' after ι")
}

/// Which reading of the closed form for `Φ^∨(ξ)` at `g_α ⊗ g_β ⊗ y_μ ∧ ȳ_ν`
/// to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MixedCoefficientForm {
    /// Derived term by term from the basis formula for `Φ^∨`.
    Derived,
    /// The commonly quoted form, whose last two correction terms read
    /// `c(α-1, β, ν̄, μ)` and `c(α-1, β-1, ν̄, μ̄)`.
    Quoted,
}

/// Closed-form coefficient of `Φ^∨(ξ)` at `g_α ⊗ g_β ⊗ y_μ ∧ ȳ_ν`, where
/// `ξ` has coordinates in `S_{k-2} ⊗ S_{k-2} ⊗ V_{n-1} ⊗ V_{n-1}` and
/// out-of-range coefficients count as zero.
#[allow(clippy::too_many_arguments)]
pub fn mixed_wedge_coefficient(
    k: i64,
    n: i64,
    xi: &[Rational],
    alpha: usize,
    beta: usize,
    mu: usize,
    nu: usize,
    form: MixedCoefficientForm,
) -> Rational {
    let space = phi_dual_domain(k, n);
    let sd = Factor::s(k - 2).dim() as i64;
    let len = n; // S_{n-1} has n basis vectors
    let c = |a: i64, b: i64, (bar1, m1): (bool, i64), (bar2, m2): (bool, i64)| -> Rational {
        if a < 0 || b < 0 || a >= sd || b >= sd || m1 < 0 || m2 < 0 || m1 >= len || m2 >= len {
            return Rational::zero();
        }
        let i1 = v_index(n - 1, bar1, m1 as usize);
        let i2 = v_index(n - 1, bar2, m2 as usize);
        xi[space.index(&[a as usize, b as usize, i1, i2])].clone()
    };
    let (a, b, m, v) = (alpha as i64, beta as i64, mu as i64, nu as i64);
    let x = |i: i64| (false, i);
    let xb = |i: i64| (true, i);
    let (third, fourth) = match form {
        MixedCoefficientForm::Derived => (c(a - 1, b, xb(v), x(m - 1)), c(a - 1, b - 1, xb(v), x(m))),
        MixedCoefficientForm::Quoted => (c(a - 1, b, xb(v), x(m)), c(a - 1, b - 1, xb(v), xb(m))),
    };
    c(a, b, x(m - 1), xb(v - 1)) - c(a, b, xb(v - 1), x(m - 1)) - c(a, b - 1, x(m - 1), xb(v))
        + c(a, b - 1, xb(v - 1), x(m))
        - c(a - 1, b, x(m), xb(v - 1))
        + third
        + c(a - 1, b - 1, x(m), xb(v))
        - fourth
}

/// Row of `Φ^∨` for `g_α ⊗ g_β ⊗ y_μ ∧ ȳ_ν`.
pub fn mixed_wedge_row(k: i64, n: i64, alpha: usize, beta: usize, mu: usize, nu: usize) -> usize {
    let cod = TensorSpace::new(vec![Factor::s(k - 1), Factor::s(k - 1), Factor::wedge2_v(n)]);
    let vd = Factor::v(n).dim();
    let w = wedge_index(vd, v_index(n, false, mu), v_index(n, true, nu));
    cod.index(&[alpha, beta, w])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{kernel_basis, rank};

    #[test]
    fn phi_matches_explicit_dual() {
        for k in 2..=5 {
            for n in 1..=4 {
                assert_eq!(phi(k, n).transpose(), phi_dual_explicit(k, n), "(n={n}, k={k})");
            }
        }
    }

    #[test]
    fn phi_dual_shapes() {
        let p = phi_dual_explicit(3, 2);
        assert_eq!((p.nrows(), p.ncols()), (135, 64));
        let p = phi_dual_explicit(6, 3);
        assert_eq!((p.nrows(), p.ncols()), (1008, 900));
    }

    #[test]
    fn epsilon_prime_constructions_agree() {
        for k in 2..=5 {
            for n in 1..=4 {
                assert_eq!(epsilon_prime(k, n), epsilon_prime_via_beta(k, n), "(n={n}, k={k})");
            }
        }
    }

    #[test]
    fn epsilon_lands_in_kernel() {
        for k in 2..=5 {
            for n in 1..=4 {
                let prod = phi_dual_explicit(k, n).compose(&epsilon(k, n)).unwrap();
                assert!(prod.is_zero(), "(n={n}, k={k})");
            }
        }
    }

    #[test]
    fn small_kernels() {
        for (n, k, dim) in [(2, 3, 3), (2, 4, 12), (3, 3, 10)] {
            let p = phi_dual_explicit(k, n);
            assert_eq!(kernel_basis(&p).len(), dim);
            assert_eq!(rank(&epsilon(k, n)), dim);
        }
    }

    #[test]
    fn unswapped_pairing_fails() {
        // ε' with u paired to f instead of f' does not land in ker Φ^∨
        let (k, n) = (3, 2);
        let dom = epsilon_prime_domain(k, n);
        let cod = phi_dual_domain(k, n);
        let mut entries = Vec::new();
        for col in 0..dom.dim() {
            let p = dom.decompose(col);
            let (bar, mu) = v_decode(n - 2, p[2]);
            let (bar2, nu) = v_decode(n - 2, p[3]);
            for (x, y, sign) in [(0, 0, 1), (0, 1, -1), (1, 0, -1), (1, 1, 1)] {
                let u = v_index(n - 1, bar, mu + 1 - x);
                let u2 = v_index(n - 1, bar2, nu + 1 - y);
                entries.push((cod.index(&[p[0] + x, p[1] + y, u, u2]), col, rat(sign)));
            }
        }
        let naive = ExactMatrix::from_entries(dom, cod, entries);
        assert!(!phi_dual_explicit(k, n).compose(&naive).unwrap().is_zero());
    }

    #[test]
    fn phi_dual_is_weight_homogeneous() {
        let p = phi_dual_explicit(4, 2);
        assert!(p.is_weight_homogeneous());
        let ker = p.kernel_character().unwrap();
        let expected = TensorSpace::new(vec![Factor::s(1), Factor::s(1), Factor::sym2_v(0)]).character();
        assert_eq!(ker, expected);
    }

    #[test]
    fn mixed_coefficient_derived_form() {
        use rand::{Rng, SeedableRng};
        let (k, n) = (3, 2);
        let p = phi_dual_explicit(k, n);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let mut quoted_mismatch = false;
        for _ in 0..50 {
            let xi: Vec<Rational> = (0..p.ncols()).map(|_| rat(rng.gen_range(-10..=10))).collect();
            let image = p.mul_vec(&xi).unwrap();
            for a in 0..k as usize {
                for b in 0..k as usize {
                    for mu in 0..=n as usize {
                        for nu in 0..=n as usize {
                            let row = mixed_wedge_row(k, n, a, b, mu, nu);
                            let derived = mixed_wedge_coefficient(k, n, &xi, a, b, mu, nu, MixedCoefficientForm::Derived);
                            assert_eq!(image[row], derived);
                            let quoted = mixed_wedge_coefficient(k, n, &xi, a, b, mu, nu, MixedCoefficientForm::Quoted);
                            quoted_mismatch |= quoted != derived;
                        }
                    }
                }
            }
        }
        assert!(quoted_mismatch);
    }
}
