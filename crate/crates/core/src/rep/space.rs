use std::fmt;

use super::character::Character;

/// The underlying representation of a tensor factor, before dualization.
///
/// Degree parameters are signed so that `S(m)` with `m < 0` is the zero space;
/// this keeps the boundary cases (`k = 2`, `n = 1`) uniform.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FactorKind {
    /// `S_m = S^m U`, basis `s^{m-i} t^i`.
    S(i64),
    /// `V_m = U ⊗ S_m`, basis `x_0..x_m` (`s ⊗ …`) then `x̄_0..x̄_m` (`t ⊗ …`).
    V(i64),
    /// `Λ²V_m`, basis `v_i ∧ v_j` for `i < j` in lexicographic order.
    Wedge2V(i64),
    /// `S²V_m`, basis `v_i · v_j` for `i <= j` in lexicographic order.
    Sym2V(i64),
    /// A trivial representation `K^d` (all weights zero).
    Coord(usize),
}

/// One elementary tensor factor, possibly dualized.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Factor {
    pub kind: FactorKind,
    pub dual: bool,
}

impl Factor {
    pub fn s(m: i64) -> Self {
        Self::plain(FactorKind::S(m))
    }

    pub fn v(m: i64) -> Self {
        Self::plain(FactorKind::V(m))
    }

    pub fn wedge2_v(m: i64) -> Self {
        Self::plain(FactorKind::Wedge2V(m))
    }

    pub fn sym2_v(m: i64) -> Self {
        Self::plain(FactorKind::Sym2V(m))
    }

    pub fn coord(d: usize) -> Self {
        Self::plain(FactorKind::Coord(d))
    }

    fn plain(kind: FactorKind) -> Self {
        Factor { kind, dual: false }
    }

    /// The dual factor. Dual spaces share the index set of the original.
    pub fn dual(self) -> Self {
        Factor {
            kind: self.kind,
            dual: !self.dual,
        }
    }

    pub fn dim(&self) -> usize {
        match self.kind {
            FactorKind::S(m) => s_dim(m),
            FactorKind::V(m) => v_dim(m),
            FactorKind::Wedge2V(m) => {
                let d = v_dim(m);
                d * d.saturating_sub(1) / 2
            }
            FactorKind::Sym2V(m) => {
                let d = v_dim(m);
                d * (d + 1) / 2
            }
            FactorKind::Coord(d) => d,
        }
    }

    /// Torus weight of basis vector `i`: `s` has weight `+1`, `t` weight `-1`.
    pub fn weight(&self, i: usize) -> i64 {
        let w = match self.kind {
            FactorKind::S(m) => m - 2 * i as i64,
            FactorKind::V(m) => v_weight(m, i),
            FactorKind::Wedge2V(m) => {
                let (a, b) = wedge_pair(v_dim(m), i);
                v_weight(m, a) + v_weight(m, b)
            }
            FactorKind::Sym2V(m) => {
                let (a, b) = sym_pair(v_dim(m), i);
                v_weight(m, a) + v_weight(m, b)
            }
            FactorKind::Coord(_) => 0,
        };
        if self.dual {
            -w
        } else {
            w
        }
    }

    /// Character computed from the factor's structure (not by enumerating
    /// its basis).
    pub fn character(&self) -> Character {
        let c = match self.kind {
            FactorKind::S(m) => Character::irreducible(m),
            FactorKind::V(m) => Character::irreducible(1).mul(&Character::irreducible(m)),
            FactorKind::Wedge2V(m) => Factor::v(m).character().wedge2(),
            FactorKind::Sym2V(m) => Factor::v(m).character().sym2(),
            FactorKind::Coord(d) => Character::constant(d as i64),
        };
        if self.dual {
            c.invert_weights()
        } else {
            c
        }
    }

    pub fn basis_label(&self, i: usize) -> String {
        let label = match self.kind {
            FactorKind::S(m) => monomial_label(m, i),
            FactorKind::V(m) => v_label(m, i),
            FactorKind::Wedge2V(m) => {
                let (a, b) = wedge_pair(v_dim(m), i);
                format!("{}∧{}", v_label(m, a), v_label(m, b))
            }
            FactorKind::Sym2V(m) => {
                let (a, b) = sym_pair(v_dim(m), i);
                format!("{}·{}", v_label(m, a), v_label(m, b))
            }
            FactorKind::Coord(_) => format!("e{i}"),
        };
        if self.dual {
            format!("({label})^")
        } else {
            label
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FactorKind::S(m) => write!(f, "S({m})")?,
            FactorKind::V(m) => write!(f, "V({m})")?,
            FactorKind::Wedge2V(m) => write!(f, "Wedge2(V({m}))")?,
            FactorKind::Sym2V(m) => write!(f, "Sym2(V({m}))")?,
            FactorKind::Coord(d) => write!(f, "K^{d}")?,
        }
        if self.dual {
            write!(f, "^")?;
        }
        Ok(())
    }
}

pub(crate) fn s_dim(m: i64) -> usize {
    if m < 0 {
        0
    } else {
        (m + 1) as usize
    }
}

pub(crate) fn v_dim(m: i64) -> usize {
    2 * s_dim(m)
}

fn v_weight(m: i64, i: usize) -> i64 {
    let (bar, mu) = v_decode(m, i);
    let u = if bar { -1 } else { 1 };
    u + m - 2 * mu as i64
}

/// Index of `x_mu` (`bar = false`) or `x̄_mu` (`bar = true`) in `V_m`.
pub fn v_index(m: i64, bar: bool, mu: usize) -> usize {
    debug_assert!(mu < s_dim(m));
    if bar {
        s_dim(m) + mu
    } else {
        mu
    }
}

/// Inverse of [`v_index`].
pub fn v_decode(m: i64, i: usize) -> (bool, usize) {
    let d = s_dim(m);
    debug_assert!(i < 2 * d);
    if i < d {
        (false, i)
    } else {
        (true, i - d)
    }
}

/// Index of `v_i ∧ v_j` (`i < j`) among pairs of a `d`-dimensional space.
pub fn wedge_index(d: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < d);
    i * d - i * (i + 1) / 2 + (j - i - 1)
}

/// Inverse of [`wedge_index`].
pub fn wedge_pair(d: usize, mut idx: usize) -> (usize, usize) {
    for i in 0..d {
        let row = d - i - 1;
        if idx < row {
            return (i, i + 1 + idx);
        }
        idx -= row;
    }
    panic!("wedge index out of range");
}

/// Index of `v_i · v_j` (`i <= j`) among unordered pairs of a `d`-dimensional space.
pub fn sym_index(d: usize, i: usize, j: usize) -> usize {
    debug_assert!(i <= j && j < d);
    i * d - i * i.saturating_sub(1) / 2 + (j - i)
}

/// Inverse of [`sym_index`].
pub fn sym_pair(d: usize, mut idx: usize) -> (usize, usize) {
    for i in 0..d {
        let row = d - i;
        if idx < row {
            return (i, i + idx);
        }
        idx -= row;
    }
    panic!("symmetric index out of range");
}

fn monomial_label(m: i64, i: usize) -> String {
    let a = m - i as i64;
    let part = |var: &str, e: i64| match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    };
    let s = format!("{}{}", part("s", a), part("t", i as i64));
    if s.is_empty() {
        "1".to_string()
    } else {
        s
    }
}

fn v_label(m: i64, i: usize) -> String {
    let (bar, mu) = v_decode(m, i);
    let u = if bar { "t" } else { "s" };
    format!("{u}⊗{}", monomial_label(m, mu))
}

/// An ordered tensor product of elementary factors with its canonical basis.
///
/// The basis index of a pure tensor is the mixed-radix (row-major) composition
/// of the factor indices, so the first factor varies slowest.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TensorSpace {
    factors: Vec<Factor>,
    dims: Vec<usize>,
    dim: usize,
}

impl TensorSpace {
    pub fn new(factors: Vec<Factor>) -> Self {
        let dims: Vec<usize> = factors.iter().map(Factor::dim).collect();
        let dim = dims.iter().product();
        TensorSpace { factors, dims, dim }
    }

    /// `K^d` with trivial weights; used for matrices without representation
    /// structure.
    pub fn coords(d: usize) -> Self {
        Self::new(vec![Factor::coord(d)])
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn factor_dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn tensor(&self, other: &TensorSpace) -> TensorSpace {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        TensorSpace::new(factors)
    }

    pub fn dual(&self) -> TensorSpace {
        TensorSpace::new(self.factors.iter().map(|f| f.dual()).collect())
    }

    /// The space with factors reordered so that new factor `i` is old factor
    /// `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> TensorSpace {
        TensorSpace::new(perm.iter().map(|&p| self.factors[p]).collect())
    }

    pub fn index(&self, parts: &[usize]) -> usize {
        assert_eq!(parts.len(), self.dims.len(), "wrong number of factor indices");
        parts.iter().zip(&self.dims).fold(0, |acc, (&i, &d)| {
            debug_assert!(i < d);
            acc * d + i
        })
    }

    pub fn decompose(&self, mut idx: usize) -> Vec<usize> {
        debug_assert!(idx < self.dim);
        let mut parts = vec![0; self.dims.len()];
        for (slot, &d) in parts.iter_mut().zip(&self.dims).rev() {
            *slot = idx % d;
            idx /= d;
        }
        parts
    }

    pub fn weight(&self, idx: usize) -> i64 {
        self.decompose(idx)
            .iter()
            .zip(&self.factors)
            .map(|(&i, f)| f.weight(i))
            .sum()
    }

    pub fn weights(&self) -> Vec<i64> {
        (0..self.dim).map(|i| self.weight(i)).collect()
    }

    /// Character as the product of factor characters.
    pub fn character(&self) -> Character {
        self.factors
            .iter()
            .fold(Character::constant(1), |acc, f| acc.mul(&f.character()))
    }

    /// Character obtained by enumerating the basis and its weights.
    pub fn basis_character(&self) -> Character {
        Character::from_weights(self.weights())
    }

    pub fn basis_label(&self, idx: usize) -> String {
        self.decompose(idx)
            .iter()
            .zip(&self.factors)
            .map(|(&i, f)| f.basis_label(i))
            .collect::<Vec<_>>()
            .join(" ⊗ ")
    }
}

impl fmt::Display for TensorSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "K");
        }
        let parts: Vec<String> = self.factors.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(" ⊗ "))
    }
}
