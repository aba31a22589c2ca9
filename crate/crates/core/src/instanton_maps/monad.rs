//! The special symplectic monad `A → B ⊗ Λ²V^∨_n`, `B ⊗ V^∨_n → C` with
//! `b = β^∨` and `a = κ ∘ α̃`.

use num_traits::{One, Zero};
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::{rank, rat, ExactMatrix, Rational, Vector};
use crate::rep::{
    cg_beta_twisted, desym_sigma, v_decode, wedge_pair, Factor, TensorSpace,
};

/// Number of coefficients of `α ∈ S^∨_{2n+2k-2}`.
pub fn alpha_len(n: i64, k: i64) -> usize {
    (2 * n + 2 * k - 1) as usize
}

/// `(n, k, α)` determining a special symplectic `k`-instanton monad on
/// `P^{2n+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonadSpec {
    n: i64,
    k: i64,
    alpha: Vec<Rational>,
}

impl MonadSpec {
    pub fn new(n: i64, k: i64, alpha: Vec<Rational>) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidSpec(format!("n must be at least 1, got {n}")));
        }
        if k < 2 {
            return Err(Error::InvalidSpec(format!("k must be at least 2, got {k}")));
        }
        if alpha.len() != alpha_len(n, k) {
            return Err(Error::InvalidSpec(format!(
                "alpha needs {} coefficients for n={n}, k={k}, got {}",
                alpha_len(n, k),
                alpha.len()
            )));
        }
        if alpha.iter().all(Zero::is_zero) {
            return Err(Error::InvalidSpec("alpha must be nonzero".into()));
        }
        Ok(MonadSpec { n, k, alpha })
    }

    /// `α` with integer coefficients drawn uniformly from `[-10, 10]`.
    pub fn random<R: Rng + ?Sized>(n: i64, k: i64, rng: &mut R) -> Result<Self> {
        let len = alpha_len(n, k);
        loop {
            let alpha: Vec<Rational> = (0..len).map(|_| rat(rng.gen_range(-10..=10))).collect();
            if alpha.iter().any(|a| !a.is_zero()) {
                return Self::new(n, k, alpha);
            }
        }
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn alpha(&self) -> &[Rational] {
        &self.alpha
    }
}

/// The special `b = β^∨: S^∨_{k-1} ⊗ V^∨_n → S^∨_{k-2} ⊗ V^∨_{n-1}`
/// (the `Λ²U^∨` factor of `C` is dropped).
pub fn special_b(k: i64, n: i64) -> ExactMatrix {
    cg_beta_twisted(k - 1, n).transpose()
}

/// Catalecticant `α̃: S_{k-1} → S^∨_{2n+k-1}`, `α̃(f)(g) = α(fg)`. The matrix
/// is Hankel: entry `(j, i)` is `α[i + j]`.
pub fn catalecticant(spec: &MonadSpec) -> ExactMatrix {
    let (n, k) = (spec.n, spec.k);
    let dom = TensorSpace::new(vec![Factor::s(k - 1)]);
    let cod = TensorSpace::new(vec![Factor::s(2 * n + k - 1).dual()]);
    let entries: Vec<_> = (0..cod.dim())
        .flat_map(|j| (0..dom.dim()).map(move |i| (j, i)))
        .map(|(j, i)| (j, i, spec.alpha[i + j].clone()))
        .collect();
    ExactMatrix::from_entries(dom, cod, entries)
}

/// `d: S_{k-1} ⊗ Λ²V_n → S_{2n+k-1}`,
/// `f ⊗ (u ⊗ g) ∧ (w ⊗ h) ↦ sign(u, w) · fgh` with `sign(s, t) = 1`,
/// `sign(t, s) = -1` and `0` when `u = w`. Its transpose is `κ`.
pub fn kappa_dual(k: i64, n: i64) -> ExactMatrix {
    let dom = TensorSpace::new(vec![Factor::s(k - 1), Factor::wedge2_v(n)]);
    let cod = TensorSpace::new(vec![Factor::s(2 * n + k - 1)]);
    let vd = Factor::v(n).dim();
    let wd = Factor::wedge2_v(n).dim();
    let mut entries = Vec::new();
    for f in 0..Factor::s(k - 1).dim() {
        for w in 0..wd {
            let (i, j) = wedge_pair(vd, w);
            let (bar_i, g) = v_decode(n, i);
            let (bar_j, h) = v_decode(n, j);
            let sign = match (bar_i, bar_j) {
                (false, true) => 1,
                (true, false) => -1,
                _ => 0,
            };
            if sign != 0 {
                entries.push((f + g + h, dom.index(&[f, w]), rat(sign)));
            }
        }
    }
    ExactMatrix::from_entries(dom, cod, entries)
}

/// `κ: S^∨_{2n+k-1} → S^∨_{k-1} ⊗ Λ²V^∨_n`.
pub fn kappa(k: i64, n: i64) -> ExactMatrix {
    kappa_dual(k, n).transpose()
}

/// `a = κ ∘ α̃: S_{k-1} → S^∨_{k-1} ⊗ Λ²V^∨_n`.
pub fn special_a(spec: &MonadSpec) -> ExactMatrix {
    kappa(spec.k, spec.n)
        .compose(&catalecticant(spec))
        .expect("κ and α̃ share S^∨_{2n+k-1}")
}

/// Dimensions `(dim A, dim B, dim C)` of a `k`-instanton monad on `P^{2n+1}`.
pub fn monad_dims(n: i64, k: i64) -> (usize, usize, usize) {
    (k as usize, k as usize, (2 * n * (k - 1)) as usize)
}

/// The two maps of a monad, with `A = S_{k-1}`, `B = S^∨_{k-1}` and
/// `C = S^∨_{k-2} ⊗ V^∨_{n-1}`.
#[derive(Clone, Debug)]
pub struct MonadMatrices {
    pub n: i64,
    pub k: i64,
    pub a: ExactMatrix,
    pub b: ExactMatrix,
}

impl MonadMatrices {
    pub fn special(spec: &MonadSpec) -> Self {
        MonadMatrices {
            n: spec.n,
            k: spec.k,
            a: special_a(spec),
            b: special_b(spec.k, spec.n),
        }
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        let dim_b = self
            .b
            .domain()
            .factor_dims()
            .first()
            .copied()
            .unwrap_or(0);
        (self.a.ncols(), dim_b, self.b.nrows())
    }
}

/// `B ⊗ Λ²V^∨ → B ⊗ V^∨ ⊗ V^∨ → C ⊗ V^∨`, the map induced by `b`.
pub fn induced_b(b: &ExactMatrix, n: i64) -> ExactMatrix {
    let b_space = TensorSpace::new(vec![b.domain().factors()[0]]);
    let v_dual = TensorSpace::new(vec![Factor::v(n).dual()]);
    let lift = ExactMatrix::identity(b_space).kron(&desym_sigma(n, true));
    b.kron(&ExactMatrix::identity(v_dual))
        .compose(&lift)
        .expect("b ⊗ id starts at B ⊗ V^∨ ⊗ V^∨")
}

/// True iff `A → B ⊗ Λ²V^∨ → C ⊗ V^∨` composes to the zero matrix.
pub fn monad_complex_check(m: &MonadMatrices) -> Result<bool> {
    let second = induced_b(&m.b, m.n);
    Ok(second.compose(&m.a)?.is_zero())
}

fn check_point(n: i64, v: &[Rational]) -> Result<()> {
    let d = Factor::v(n).dim();
    if v.len() != d {
        return Err(Error::DimensionMismatch(format!(
            "point of V_{n} needs {d} coordinates, got {}",
            v.len()
        )));
    }
    if v.iter().all(Zero::is_zero) {
        return Err(Error::ZeroVector);
    }
    Ok(())
}

/// Contraction with `v`: `Λ²V^∨ → V^∨`, `φ ∧ ψ ↦ φ(v)ψ − ψ(v)φ`.
pub fn contraction(n: i64, v: &[Rational]) -> ExactMatrix {
    let vd = Factor::v(n).dim();
    let dom = TensorSpace::new(vec![Factor::wedge2_v(n).dual()]);
    let cod = TensorSpace::new(vec![Factor::v(n).dual()]);
    let mut entries = Vec::new();
    for col in 0..dom.dim() {
        let (i, j) = wedge_pair(vd, col);
        entries.push((j, col, v[i].clone()));
        entries.push((i, col, -v[j].clone()));
    }
    ExactMatrix::from_entries(dom, cod, entries)
}

/// Inclusion of the annihilator `ann(v) ⊂ V^∨_n` with its standard basis
/// `e^j − (v_j / v_p) e^p`, `p` the first nonzero coordinate of `v`.
pub fn annihilator(n: i64, v: &[Rational]) -> ExactMatrix {
    let vd = v.len();
    let p = v.iter().position(|x| !x.is_zero()).expect("nonzero point");
    let cod = TensorSpace::new(vec![Factor::v(n).dual()]);
    let dom = TensorSpace::coords(vd - 1);
    let mut entries = Vec::new();
    for (col, j) in (0..vd).filter(|&j| j != p).enumerate() {
        entries.push((j, col, Rational::one()));
        entries.push((p, col, -(&v[j] / &v[p])));
    }
    ExactMatrix::from_entries(dom, cod, entries)
}

/// Rank of `a_v: A → B ⊗ V^∨` at the point `[v]`; the subbundle condition
/// holds at `[v]` iff this equals `k`.
pub fn fiber_check_a(m: &MonadMatrices, v: &[Rational]) -> Result<usize> {
    check_point(m.n, v)?;
    let b_space = TensorSpace::new(vec![m.a.codomain().factors()[0]]);
    let contract = ExactMatrix::identity(b_space).kron(&contraction(m.n, v));
    Ok(rank(&contract.compose(&m.a)?))
}

/// Rank of `b` restricted to `B ⊗ ann(v)`; `b̃` is surjective at `[v]` iff
/// this equals `2n(k-1)`.
pub fn fiber_check_b(k: i64, n: i64, v: &[Rational]) -> Result<usize> {
    check_point(n, v)?;
    let b = special_b(k, n);
    let b_space = TensorSpace::new(vec![Factor::s(k - 1).dual()]);
    let restrict = ExactMatrix::identity(b_space).kron(&annihilator(n, v));
    Ok(rank(&b.compose(&restrict)?))
}

/// Uniform integer point of `V_n` with coordinates in `[-10, 10]`.
pub fn random_point<R: Rng + ?Sized>(n: i64, rng: &mut R) -> Vector {
    let d = Factor::v(n).dim();
    loop {
        let v: Vector = (0..d).map(|_| rat(rng.gen_range(-10..=10))).collect();
        if v.iter().any(|x| !x.is_zero()) {
            return v;
        }
    }
}

/// The point `u ⊗ u^n` of `V_n` for `u = s + λt`.
pub fn curve_point(n: i64, lambda: i64) -> Vector {
    let mut coeffs = Vec::with_capacity(n as usize + 1);
    let mut binom = num_bigint::BigInt::one();
    let mut power = num_bigint::BigInt::one();
    for i in 0..=n {
        coeffs.push(Rational::from_integer(&binom * &power));
        binom = binom * (n - i) / (i + 1);
        power *= lambda;
    }
    let l = rat(lambda);
    let barred: Vec<Rational> = coeffs.iter().map(|c| c * &l).collect();
    coeffs.into_iter().chain(barred).collect()
}

/// Parameters `0, 1, -1, 2, -2, …` for curve sampling.
pub fn curve_parameters(count: usize) -> Vec<i64> {
    (0..count as i64)
        .map(|i| if i % 2 == 1 { (i + 1) / 2 } else { -(i / 2) })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FiberSampling {
    pub random_points: usize,
    pub curve_points: usize,
}

impl Default for FiberSampling {
    fn default() -> Self {
        FiberSampling {
            random_points: 100,
            curve_points: 20,
        }
    }
}

/// Outcome of fiberwise rank checks at sampled points. Evidence only: the
/// secant condition itself is never decided.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberReport {
    pub points: usize,
    pub a_full: usize,
    pub b_full: usize,
    pub min_rank_a: usize,
    pub min_rank_b: usize,
    /// Points (as integer coordinate strings) where a rank dropped.
    pub deficient: Vec<String>,
}

impl FiberReport {
    pub fn all_a_full(&self) -> bool {
        self.a_full == self.points
    }

    pub fn all_b_full(&self) -> bool {
        self.b_full == self.points
    }
}

/// Runs both fiber checks at `sampling.random_points` random points and
/// `sampling.curve_points` points of the curve `u ↦ u ⊗ u^n`.
pub fn sample_fibers<R: Rng + ?Sized>(
    m: &MonadMatrices,
    sampling: FiberSampling,
    rng: &mut R,
) -> Result<FiberReport> {
    let (dim_a, _, dim_c) = m.dims();
    let mut points: Vec<Vector> = (0..sampling.random_points)
        .map(|_| random_point(m.n, rng))
        .collect();
    points.extend(
        curve_parameters(sampling.curve_points)
            .into_iter()
            .map(|l| curve_point(m.n, l)),
    );
    let b = special_b(m.k, m.n);
    let mut report = FiberReport {
        points: points.len(),
        a_full: 0,
        b_full: 0,
        min_rank_a: dim_a,
        min_rank_b: dim_c,
        deficient: Vec::new(),
    };
    let b_space = TensorSpace::new(vec![Factor::s(m.k - 1).dual()]);
    for v in &points {
        let ra = fiber_check_a(m, v)?;
        check_point(m.n, v)?;
        let restrict = ExactMatrix::identity(b_space.clone()).kron(&annihilator(m.n, v));
        let rb = rank(&b.compose(&restrict)?);
        report.a_full += usize::from(ra == dim_a);
        report.b_full += usize::from(rb == dim_c);
        report.min_rank_a = report.min_rank_a.min(ra);
        report.min_rank_b = report.min_rank_b.min(rb);
        if ra < dim_a || rb < dim_c {
            let coords: Vec<String> = v.iter().map(ToString::to_string).collect();
            report.deficient.push(format!("[{}]", coords.join(",")));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::int_vector;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn delta(n: i64, k: i64) -> MonadSpec {
        let mut alpha = vec![rat(0); alpha_len(n, k)];
        alpha[0] = rat(1);
        MonadSpec::new(n, k, alpha).unwrap()
    }

    #[test]
    fn spec_validation() {
        assert!(MonadSpec::new(0, 3, vec![rat(1); 5]).is_err());
        assert!(MonadSpec::new(2, 1, vec![rat(1); 5]).is_err());
        assert!(MonadSpec::new(2, 3, vec![rat(1); 4]).is_err());
        let zero = MonadSpec::new(2, 3, vec![rat(0); 9]);
        assert_eq!(zero, Err(Error::InvalidSpec("alpha must be nonzero".into())));
        assert!(MonadSpec::new(2, 3, vec![rat(1); 9]).is_ok());
    }

    #[test]
    fn special_b_shapes_and_rank() {
        // C = S^∨_0 ⊗ V^∨_0 has dimension 2n(k-1) = 2
        let b = special_b(2, 1);
        assert_eq!((b.nrows(), b.ncols()), (2, 8));
        assert_eq!(rank(&b), 2);
        for k in 2..=5 {
            for n in 1..=5 {
                let b = special_b(k, n);
                assert_eq!(rank(&b), (2 * n * (k - 1)) as usize, "({k},{n})");
                assert!(b.is_weight_homogeneous());
            }
        }
    }

    #[test]
    fn catalecticant_is_hankel() {
        let spec = MonadSpec::new(1, 2, int_vector(&[1, 2, 3, 4, 5])).unwrap();
        let c = catalecticant(&spec);
        assert_eq!((c.nrows(), c.ncols()), (4, 2));
        let spec = MonadSpec::new(2, 3, int_vector(&[1, 2, 3, 4, 5, 6, 7, 8, 9])).unwrap();
        let c = catalecticant(&spec);
        assert_eq!((c.nrows(), c.ncols()), (7, 3));
        for j in 0..7 {
            for i in 0..3 {
                assert_eq!(c.get(j, i), rat((i + j + 1) as i64));
            }
        }
        let d = catalecticant(&delta(2, 3));
        assert_eq!(d.nnz(), 1);
        assert_eq!(d.get(0, 0), rat(1));
    }

    #[test]
    fn geometric_alpha_gives_rank_one() {
        for lambda in [-3i64, 2, 5] {
            let alpha: Vec<Rational> = (0..alpha_len(2, 4)).map(|j| rat(lambda.pow(j as u32))).collect();
            let spec = MonadSpec::new(2, 4, alpha).unwrap();
            assert_eq!(rank(&catalecticant(&spec)), 1);
        }
    }

    #[test]
    fn kappa_dual_values() {
        let (k, n) = (3, 2);
        let d = kappa_dual(k, n);
        let vd = Factor::v(n).dim();
        // f = s^{k-1}, (s ⊗ s^n) ∧ (t ⊗ s^n) ↦ s^{2n+k-1}
        let w = crate::rep::wedge_index(vd, 0, 3);
        let col = d.domain().index(&[0, w]);
        assert_eq!(d.get(0, col), rat(1));
        assert_eq!(d.row(0).len() + d.rows()[1..].iter().filter(|r| r.iter().any(|(c, _)| *c == col)).count(), d.row(0).len());
        // (s ⊗ g) ∧ (s ⊗ h) ↦ 0
        let ss = d.domain().index(&[0, crate::rep::wedge_index(vd, 0, 1)]);
        assert!((0..d.nrows()).all(|r| d.get(r, ss).is_zero()));
        for k in 1..=5 {
            for n in 1..=5 {
                let d = kappa_dual(k, n);
                assert_eq!(rank(&d), (2 * n + k) as usize);
                assert!(d.is_weight_homogeneous());
            }
        }
    }

    #[test]
    fn special_a_factors_through_catalecticant() {
        let a = special_a(&delta(2, 3));
        assert!(rank(&a) <= 1);
        assert!(a.is_weight_homogeneous() || !a.is_zero());
    }

    #[test]
    fn complex_condition() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 1..=3 {
            for k in 2..=4 {
                let spec = MonadSpec::random(n, k, &mut rng).unwrap();
                let m = MonadMatrices::special(&spec);
                assert_eq!(m.dims(), monad_dims(n, k));
                assert!(monad_complex_check(&m).unwrap(), "({n},{k})");
            }
        }
        let spec = MonadSpec::random(2, 3, &mut rng).unwrap();
        let m = MonadMatrices::special(&spec);
        let zero_a = MonadMatrices {
            a: ExactMatrix::zero(m.a.domain().clone(), m.a.codomain().clone()),
            ..m.clone()
        };
        assert!(monad_complex_check(&zero_a).unwrap());
        let second = induced_b(&m.b, 2);
        let r = (0..m.a.nrows()).find(|&r| (0..second.nrows()).any(|i| !second.get(i, r).is_zero())).unwrap();
        let perturbed = MonadMatrices {
            a: m.a.with_entry(r, 0, m.a.get(r, 0) + rat(1)),
            ..m.clone()
        };
        assert!(!monad_complex_check(&perturbed).unwrap());
    }

    #[test]
    fn complex_check_rejects_mismatched_maps() {
        let spec = MonadSpec::random(2, 3, &mut ChaCha8Rng::seed_from_u64(1)).unwrap();
        let m = MonadMatrices {
            b: special_b(4, 2),
            ..MonadMatrices::special(&spec)
        };
        assert!(matches!(monad_complex_check(&m), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn fiber_checks_small() {
        // (n=1, k=2) at v = s ⊗ s
        assert_eq!(fiber_check_b(2, 1, &int_vector(&[1, 0, 0, 0])).unwrap(), 2);
        assert_eq!(fiber_check_b(2, 1, &int_vector(&[0, 0, 0, 0])), Err(Error::ZeroVector));
        assert!(fiber_check_b(2, 1, &int_vector(&[1, 0])).is_err());
        for l in curve_parameters(20) {
            assert_eq!(fiber_check_b(3, 2, &curve_point(2, l)).unwrap(), 8);
        }
    }

    #[test]
    fn rank_deficient_alpha_is_detected() {
        let m = MonadMatrices::special(&delta(2, 3));
        let v = curve_point(2, 1);
        assert!(fiber_check_a(&m, &v).unwrap() < 3);
        let report = sample_fibers(&m, FiberSampling { random_points: 5, curve_points: 2 }, &mut ChaCha8Rng::seed_from_u64(3)).unwrap();
        assert!(!report.all_a_full());
        assert!(!report.deficient.is_empty());
    }

    #[test]
    fn curve_points() {
        assert_eq!(curve_point(2, 0), int_vector(&[1, 0, 0, 0, 0, 0]));
        assert_eq!(curve_point(2, 2), int_vector(&[1, 4, 4, 2, 8, 8]));
        assert_eq!(curve_parameters(5), vec![0, 1, -1, 2, -2]);
    }

    #[test]
    fn contraction_lands_in_annihilator() {
        let v = int_vector(&[2, -1, 0, 3, 1, 5]);
        let c = contraction(2, &v);
        // every image φ satisfies φ(v) = 0
        let evaluate = ExactMatrix::from_rational_rows(6, std::slice::from_ref(&v));
        let evaluate = evaluate.relabel(c.codomain().clone(), TensorSpace::coords(1)).unwrap();
        assert!(evaluate.compose(&c).unwrap().is_zero());
        let ann = annihilator(2, &v);
        assert_eq!(rank(&ann), 5);
        assert!(evaluate.compose(&ann).unwrap().is_zero());
    }
}
