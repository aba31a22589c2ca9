//! Clebsch–Gordan maps and the canonical (de)symmetrizations.

use num_traits::One;

use super::space::{s_dim, sym_pair, v_decode, v_dim, v_index, wedge_index, wedge_pair};
use super::{Factor, TensorSpace};
use crate::exactla::{rat, ExactMatrix, Rational};

/// Index in `V_{m+1}` of `s·v` (`by_t = false`) or `t·v` (`by_t = true`) for
/// the basis vector `v` of `V_m` with index `i`; the `U` factor is untouched.
pub fn v_multiply(m: i64, i: usize, by_t: bool) -> usize {
    let (bar, mu) = v_decode(m, i);
    v_index(m + 1, bar, mu + usize::from(by_t))
}

/// `β: S_{k-1} ⊗ S_{n-1} → S_k ⊗ S_n`, `f ⊗ g ↦ sf ⊗ tg − tf ⊗ sg`
/// (with `Λ²U` trivialized by `s ∧ t`).
pub fn cg_beta(k: i64, n: i64) -> ExactMatrix {
    let dom = TensorSpace::new(vec![Factor::s(k - 1), Factor::s(n - 1)]);
    let cod = TensorSpace::new(vec![Factor::s(k), Factor::s(n)]);
    let mut entries = Vec::new();
    for a in 0..s_dim(k - 1) {
        for c in 0..s_dim(n - 1) {
            let col = dom.index(&[a, c]);
            entries.push((cod.index(&[a, c + 1]), col, rat(1)));
            entries.push((cod.index(&[a + 1, c]), col, rat(-1)));
        }
    }
    ExactMatrix::from_entries(dom, cod, entries)
}

/// Multiplication `μ: S_k ⊗ S_n → S_{k+n}`.
pub fn cg_mu(k: i64, n: i64) -> ExactMatrix {
    let dom = TensorSpace::new(vec![Factor::s(k), Factor::s(n)]);
    let cod = TensorSpace::new(vec![Factor::s(k + n)]);
    let mut entries = Vec::new();
    for a in 0..s_dim(k) {
        for c in 0..s_dim(n) {
            entries.push((a + c, dom.index(&[a, c]), rat(1)));
        }
    }
    ExactMatrix::from_entries(dom, cod, entries)
}

/// `β: S_{k-1} ⊗ V_{n-1} → S_k ⊗ V_n`, the Clebsch–Gordan map tensored with `U`.
pub fn cg_beta_twisted(k: i64, n: i64) -> ExactMatrix {
    let dom = TensorSpace::new(vec![Factor::s(k - 1), Factor::v(n - 1)]);
    let cod = TensorSpace::new(vec![Factor::s(k), Factor::v(n)]);
    let mut entries = Vec::new();
    for a in 0..s_dim(k - 1) {
        for v in 0..v_dim(n - 1) {
            let col = dom.index(&[a, v]);
            entries.push((cod.index(&[a, v_multiply(n - 1, v, true)]), col, rat(1)));
            entries.push((cod.index(&[a + 1, v_multiply(n - 1, v, false)]), col, rat(-1)));
        }
    }
    ExactMatrix::from_entries(dom, cod, entries)
}

/// `μ: S_k ⊗ V_n → V_{k+n}`, multiplication on the symmetric part.
pub fn cg_mu_twisted(k: i64, n: i64) -> ExactMatrix {
    let dom = TensorSpace::new(vec![Factor::s(k), Factor::v(n)]);
    let cod = TensorSpace::new(vec![Factor::v(k + n)]);
    let mut entries = Vec::new();
    for a in 0..s_dim(k) {
        for v in 0..v_dim(n) {
            let (bar, mu) = v_decode(n, v);
            entries.push((v_index(k + n, bar, a + mu), dom.index(&[a, v]), rat(1)));
        }
    }
    ExactMatrix::from_entries(dom, cod, entries)
}

fn maybe_dual(f: Factor, dual: bool) -> Factor {
    if dual {
        f.dual()
    } else {
        f
    }
}

/// `σ: Λ²V_m → V_m ⊗ V_m`, `v ∧ w ↦ v ⊗ w − w ⊗ v`. With `dual` set the same
/// matrix is attached to `Λ²V_m^∨ → V_m^∨ ⊗ V_m^∨`.
pub fn desym_sigma(m: i64, dual: bool) -> ExactMatrix {
    let d = v_dim(m);
    let dom = TensorSpace::new(vec![maybe_dual(Factor::wedge2_v(m), dual)]);
    let cod = TensorSpace::new(vec![maybe_dual(Factor::v(m), dual), maybe_dual(Factor::v(m), dual)]);
    let mut entries = Vec::new();
    for col in 0..dom.dim() {
        let (i, j) = wedge_pair(d, col);
        entries.push((cod.index(&[i, j]), col, rat(1)));
        entries.push((cod.index(&[j, i]), col, rat(-1)));
    }
    ExactMatrix::from_entries(dom, cod, entries)
}

/// `V_m ⊗ V_m → Λ²V_m`, `v ⊗ w ↦ v ∧ w`. This is the transpose of `σ` under
/// the pairing `<v∧w, φ∧ψ> = φ(v)ψ(w) − φ(w)ψ(v)`, and `wedge_projection ∘ σ = 2`.
pub fn wedge_projection(m: i64) -> ExactMatrix {
    let d = v_dim(m);
    let dom = TensorSpace::new(vec![Factor::v(m), Factor::v(m)]);
    let cod = TensorSpace::new(vec![Factor::wedge2_v(m)]);
    let mut entries = Vec::new();
    for i in 0..d {
        for j in 0..d {
            if i == j {
                continue;
            }
            let (row, sign) = if i < j {
                (wedge_index(d, i, j), 1)
            } else {
                (wedge_index(d, j, i), -1)
            };
            entries.push((row, dom.index(&[i, j]), rat(sign)));
        }
    }
    ExactMatrix::from_entries(dom, cod, entries)
}

/// `ι: S²V_m → V_m ⊗ V_m`, `v · w ↦ v ⊗ w + w ⊗ v`; in particular
/// `v · v ↦ 2 v ⊗ v`.
pub fn sym_iota(m: i64) -> ExactMatrix {
    let d = v_dim(m);
    let dom = TensorSpace::new(vec![Factor::sym2_v(m)]);
    let cod = TensorSpace::new(vec![Factor::v(m), Factor::v(m)]);
    let mut entries = Vec::new();
    for col in 0..dom.dim() {
        let (i, j) = sym_pair(d, col);
        entries.push((cod.index(&[i, j]), col, rat(1)));
        entries.push((cod.index(&[j, i]), col, rat(1)));
    }
    ExactMatrix::from_entries(dom, cod, entries)
}

/// Permutation isomorphism `space → space.permuted(perm)`: new factor `i` is
/// old factor `perm[i]`.
pub fn permute_factors(space: &TensorSpace, perm: &[usize]) -> ExactMatrix {
    let k = space.factors().len();
    assert_eq!(perm.len(), k, "permutation length");
    let mut seen = vec![false; k];
    for &p in perm {
        assert!(p < k && !seen[p], "not a permutation: {perm:?}");
        seen[p] = true;
    }
    let target = space.permuted(perm);
    let entries: Vec<_> = (0..space.dim())
        .map(|col| {
            let parts = space.decompose(col);
            let moved: Vec<usize> = perm.iter().map(|&p| parts[p]).collect();
            (target.index(&moved), col, Rational::one())
        })
        .collect();
    ExactMatrix::from_entries(space.clone(), target, entries)
}
