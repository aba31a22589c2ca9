//! Constructive reduction of `ξ ∈ ker Φ^∨` to zero modulo `im ε`, one
//! leading coefficient at a time.

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::{zero_vector, ExactMatrix, Rational, Vector};
use crate::rep::{sym_index, v_decode, v_index, Factor, TensorSpace};

use super::phi::{epsilon, phi_dual_domain, phi_dual_explicit};

/// Index `(α, β, μ, ν)` of a basis vector `f_α ⊗ f_β ⊗ x ⊗ x'` of
/// `S_{k-2} ⊗ S_{k-2} ⊗ V_{n-1} ⊗ V_{n-1}`; barred entries are `x̄`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct CoefficientIndex {
    pub alpha: usize,
    pub beta: usize,
    pub mu: usize,
    pub mu_bar: bool,
    pub nu: usize,
    pub nu_bar: bool,
}

impl CoefficientIndex {
    pub fn decode(k: i64, n: i64, idx: usize) -> Self {
        let p = phi_dual_domain(k, n).decompose(idx);
        let (mu_bar, mu) = v_decode(n - 1, p[2]);
        let (nu_bar, nu) = v_decode(n - 1, p[3]);
        CoefficientIndex {
            alpha: p[0],
            beta: p[1],
            mu,
            mu_bar,
            nu,
            nu_bar,
        }
    }

    pub fn encode(&self, k: i64, n: i64) -> usize {
        phi_dual_domain(k, n).index(&[
            self.alpha,
            self.beta,
            v_index(n - 1, self.mu_bar, self.mu),
            v_index(n - 1, self.nu_bar, self.nu),
        ])
    }
}

impl fmt::Display for CoefficientIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bar = |b: bool| if b { "\u{304}" } else { "" };
        write!(
            f,
            "({}, {}, {}{}, {}{})",
            self.alpha,
            self.beta,
            self.mu,
            bar(self.mu_bar),
            self.nu,
            bar(self.nu_bar)
        )
    }
}

/// Basis vector of `S_{k-3} ⊗ S_{k-3} ⊗ S²V_{n-2}` whose `ε`-image has the
/// given leading index, or the reason no such vector exists.
fn eliminating_source(k: i64, n: i64, lead: &CoefficientIndex) -> std::result::Result<usize, String> {
    let top = (k - 3).max(-1);
    if lead.alpha as i64 > top || lead.beta as i64 > top {
        return Err(format!("α or β exceeds k-3 = {}", k - 3));
    }
    match (lead.mu_bar, lead.nu_bar) {
        (true, false) => return Err("leading index of shape (α, β, μ̄, ν)".into()),
        (false, true) => {
            if lead.mu == 0 || lead.nu == 0 {
                return Err("μ = 0 or ν = 0".into());
            }
        }
        _ => {
            if lead.mu == 0 || lead.mu > lead.nu {
                return Err("μ = 0 or μ > ν".into());
            }
        }
    }
    let d = Factor::v(n - 2).dim();
    let i = v_index(n - 2, lead.mu_bar, lead.mu - 1);
    let j = v_index(n - 2, lead.nu_bar, lead.nu - 1);
    let dom = TensorSpace::new(vec![Factor::s(k - 3), Factor::s(k - 3), Factor::sym2_v(n - 2)]);
    Ok(dom.index(&[lead.alpha, lead.beta, sym_index(d, i, j)]))
}

/// Checks the leading-term constraints satisfied by every nonzero element
/// of `ker Φ^∨`: the first nonzero coefficient of `ξ` has shape
/// `(α, β, μ, ν)` with `0 < μ ≤ ν`, `(α, β, μ, ν̄)` with `μ, ν ≠ 0`, or
/// `(α, β, μ̄, ν̄)` with `0 < μ ≤ ν`. Returns the leading index, or `None`
/// for `ξ = 0`.
pub fn check_leading_term(k: i64, n: i64, xi: &[Rational]) -> Result<Option<CoefficientIndex>> {
    let Some(idx) = xi.iter().position(|c| !c.is_zero()) else {
        return Ok(None);
    };
    let lead = CoefficientIndex::decode(k, n, idx);
    let ok = match (lead.mu_bar, lead.nu_bar) {
        (true, false) => false,
        (false, true) => lead.mu != 0 && lead.nu != 0,
        _ => lead.mu != 0 && lead.mu <= lead.nu,
    };
    if ok {
        Ok(Some(lead))
    } else {
        Err(Error::ReductionStuck {
            index: idx,
            reason: format!("leading coefficient {lead} violates the kernel constraints"),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionStep {
    /// Leading index of the running remainder.
    pub leading: CoefficientIndex,
    /// Basis vector of `S_{k-3} ⊗ S_{k-3} ⊗ S²V_{n-2}` subtracted.
    pub source: usize,
    #[serde(serialize_with = "crate::exactla::serialize_rational")]
    pub coefficient: Rational,
}

/// Record of a completed reduction: `ε(preimage) = ξ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionCertificate {
    pub steps: Vec<ReductionStep>,
    pub preimage: Vector,
}

/// Reduces `ξ ∈ ker Φ^∨` to zero by repeatedly subtracting a multiple of
/// `ε(e_α ⊗ e_β ⊗ w·w')` that cancels the leading coefficient. Each step
/// strictly raises the leading index, so at most `dim ξ` steps are taken.
///
/// Fails with [`Error::NotInKernel`] when `Φ^∨(ξ) ≠ 0` and with
/// [`Error::ReductionStuck`] if a leading coefficient cannot be eliminated.
pub fn reduce_mod_epsilon(k: i64, n: i64, xi: &[Rational]) -> Result<ReductionCertificate> {
    let phi_dual = phi_dual_explicit(k, n);
    if phi_dual.mul_vec(xi)?.iter().any(|c| !c.is_zero()) {
        return Err(Error::NotInKernel);
    }
    reduce_with(&epsilon(k, n), k, n, xi)
}

/// [`reduce_mod_epsilon`] with a prebuilt `ε` and no kernel membership test.
pub fn reduce_with(eps: &ExactMatrix, k: i64, n: i64, xi: &[Rational]) -> Result<ReductionCertificate> {
    let columns = eps.transpose();
    let mut rest: Vector = xi.to_vec();
    let mut preimage = zero_vector(eps.ncols());
    let mut steps = Vec::new();
    let mut cursor = 0;
    while let Some(off) = rest[cursor..].iter().position(|c| !c.is_zero()) {
        let idx = cursor + off;
        let lead = CoefficientIndex::decode(k, n, idx);
        let stuck = |reason: String| Error::ReductionStuck { index: idx, reason };
        let source = eliminating_source(k, n, &lead).map_err(|r| stuck(format!("{lead}: {r}")))?;
        let column = columns.row(source);
        match column.first() {
            Some((first, _)) if *first == idx => {}
            _ => return Err(stuck(format!("{lead}: ε image does not lead at this index"))),
        }
        // `w·w'` with `w = w'` doubles under ι
        let coefficient = &rest[idx] / &column[0].1;
        for (r, v) in column {
            rest[*r] -= &coefficient * v;
        }
        debug_assert!(rest[idx].is_zero());
        preimage[source] += &coefficient;
        steps.push(ReductionStep {
            leading: lead,
            source,
            coefficient,
        });
        cursor = idx + 1;
    }
    Ok(ReductionCertificate { steps, preimage })
}
