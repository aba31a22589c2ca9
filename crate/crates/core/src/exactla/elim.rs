//! Row elimination over the rationals.
//!
//! Two independent eliminators are provided. [`Eliminator::FractionFree`]
//! clears denominators row by row and runs Bareiss elimination on integer
//! rows, so every intermediate entry is a minor of the input and every
//! division is exact. [`Eliminator::Naive`] is textbook Gauss–Jordan on
//! rational rows and serves as the cross-check.
//!
//! Both return the same canonical kernel basis: for each non-pivot column
//! `f` (in increasing order) the unique kernel vector that is `1` at `f` and
//! `0` at every other non-pivot column.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::{zero_vector, ExactMatrix, Rational, Vector};
use crate::error::{Error, Result};

type IntRow = Vec<(usize, BigInt)>;
type RatRow = Vec<(usize, Rational)>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Eliminator {
    FractionFree,
    Naive,
}

/// How to eliminate: which arithmetic, and whether to split the matrix into
/// independent blocks first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Strategy {
    pub eliminator: Eliminator,
    pub split_blocks: bool,
}

impl Default for Strategy {
    fn default() -> Self {
        Strategy {
            eliminator: Eliminator::FractionFree,
            split_blocks: true,
        }
    }
}

impl Strategy {
    pub fn naive() -> Self {
        Strategy {
            eliminator: Eliminator::Naive,
            split_blocks: false,
        }
    }

    pub fn fraction_free_unsplit() -> Self {
        Strategy {
            eliminator: Eliminator::FractionFree,
            split_blocks: false,
        }
    }
}

/// A connected component of the row/column incidence graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

/// Splits a matrix into blocks with disjoint rows and columns such that every
/// nonzero entry lies in some block. Columns without entries form blocks with
/// no rows. Blocks are ordered by their smallest column.
///
/// For an equivariant map the blocks refine the weight grading.
pub fn components(m: &ExactMatrix) -> Vec<Block> {
    let n = m.ncols();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for row in m.rows() {
        if let Some((first, _)) = row.first() {
            for (c, _) in &row[1..] {
                let a = find(&mut parent, *first);
                let b = find(&mut parent, *c);
                if a != b {
                    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                    parent[hi] = lo;
                }
            }
        }
    }
    let mut by_root: BTreeMap<usize, Block> = BTreeMap::new();
    for c in 0..n {
        let r = find(&mut parent, c);
        by_root
            .entry(r)
            .or_insert_with(|| Block {
                rows: Vec::new(),
                cols: Vec::new(),
            })
            .cols
            .push(c);
    }
    for (r, row) in m.rows().iter().enumerate() {
        if let Some((first, _)) = row.first() {
            let root = find(&mut parent, *first);
            by_root.get_mut(&root).expect("root exists").rows.push(r);
        }
    }
    // Roots are the minimal column of each class, so BTreeMap order is
    // ordering by smallest column.
    by_root.into_values().collect()
}

/// Exact rank with the default strategy (blocked fraction-free elimination).
pub fn rank(m: &ExactMatrix) -> usize {
    rank_with(m, Strategy::default())
}

pub fn rank_with(m: &ExactMatrix, strategy: Strategy) -> usize {
    if strategy.split_blocks {
        components(m)
            .par_iter()
            .filter(|b| !b.rows.is_empty())
            .map(|b| rank_dense_block(&m.submatrix(&b.rows, &b.cols), strategy.eliminator))
            .sum()
    } else {
        rank_dense_block(m, strategy.eliminator)
    }
}

fn rank_dense_block(m: &ExactMatrix, eliminator: Eliminator) -> usize {
    match eliminator {
        Eliminator::FractionFree => bareiss(integer_rows(m), m.ncols()).pivots.len(),
        Eliminator::Naive => gauss_forward(rational_rows(m)).pivots.len(),
    }
}

/// Canonical basis of the right kernel with the default strategy.
pub fn kernel_basis(m: &ExactMatrix) -> Vec<Vector> {
    kernel_basis_with(m, Strategy::default())
}

pub fn kernel_basis_with(m: &ExactMatrix, strategy: Strategy) -> Vec<Vector> {
    let n = m.ncols();
    let local: Vec<(usize, Vector)> = if strategy.split_blocks {
        let blocks = components(m);
        blocks
            .par_iter()
            .map(|b| {
                let sub = m.submatrix(&b.rows, &b.cols);
                kernel_local(&sub, strategy.eliminator)
                    .into_iter()
                    .map(|(free, v)| {
                        let mut full = zero_vector(n);
                        for (i, x) in v.into_iter().enumerate() {
                            full[b.cols[i]] = x;
                        }
                        (b.cols[free], full)
                    })
                    .collect::<Vec<_>>()
            })
            .flatten()
            .collect()
    } else {
        kernel_local(m, strategy.eliminator)
    };
    let mut local = local;
    local.sort_by_key(|(free, _)| *free);
    local.into_iter().map(|(_, v)| v).collect()
}

/// Kernel vectors of a single block, tagged with their free column.
fn kernel_local(m: &ExactMatrix, eliminator: Eliminator) -> Vec<(usize, Vector)> {
    let n = m.ncols();
    match eliminator {
        Eliminator::FractionFree => {
            let ech = bareiss(integer_rows(m), n);
            free_columns(&ech.pivots, n)
                .into_iter()
                .map(|f| (f, back_substitute(&ech, f, n)))
                .collect()
        }
        Eliminator::Naive => {
            let ech = gauss_forward(rational_rows(m));
            if ech.pivots.len() == n {
                return Vec::new();
            }
            let rref = gauss_jordan(ech);
            free_columns(&rref.pivots, n)
                .into_iter()
                .map(|f| {
                    let mut v = zero_vector(n);
                    v[f] = Rational::one();
                    for (row, &p) in rref.rows.iter().zip(&rref.pivots) {
                        if let Ok(pos) = row.binary_search_by_key(&f, |(c, _)| *c) {
                            v[p] = -row[pos].1.clone();
                        }
                    }
                    (f, v)
                })
                .collect()
        }
    }
}

fn free_columns(pivots: &[usize], n: usize) -> Vec<usize> {
    let mut is_pivot = vec![false; n];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..n).filter(|&c| !is_pivot[c]).collect()
}

/// Decides whether `v ∈ Im(m)`; when it is, returns the preimage that vanishes
/// on all non-pivot columns.
pub fn in_column_space(m: &ExactMatrix, v: &[Rational]) -> Result<Option<Vector>> {
    if v.len() != m.nrows() {
        return Err(Error::DimensionMismatch(format!(
            "vector of length {} against {} rows",
            v.len(),
            m.nrows()
        )));
    }
    let n = m.ncols();
    // Augment with v as column n and solve only the component that contains it.
    let entries = m
        .entries()
        .map(|(r, c, x)| (r, c, x.clone()))
        .chain(
            v.iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(r, x)| (r, n, x.clone())),
        )
        .collect::<Vec<_>>();
    let aug = ExactMatrix::from_entries(
        crate::rep::TensorSpace::coords(n + 1),
        crate::rep::TensorSpace::coords(m.nrows()),
        entries,
    );
    let block = components(&aug)
        .into_iter()
        .find(|b| b.cols.contains(&n))
        .expect("augmented column belongs to a block");
    let mut preimage = zero_vector(n);
    if block.rows.is_empty() {
        return Ok(Some(preimage));
    }
    let sub = aug.submatrix(&block.rows, &block.cols);
    let local_n = block.cols.len();
    let rhs_col = local_n - 1;
    let ech = bareiss(integer_rows(&sub), local_n);
    if ech.pivots.contains(&rhs_col) {
        return Ok(None);
    }
    let mut x: BTreeMap<usize, Rational> = BTreeMap::new();
    for (row, &p) in ech.rows.iter().zip(&ech.pivots).rev() {
        let mut acc = Rational::zero();
        let mut lead = None;
        for (c, u) in row {
            if *c == p {
                lead = Some(u);
            } else if *c == rhs_col {
                acc += Rational::from_integer(u.clone());
            } else if let Some(xc) = x.get(c) {
                acc -= xc * Rational::from_integer(u.clone());
            }
        }
        let lead = lead.expect("pivot entry present");
        if !acc.is_zero() {
            x.insert(p, acc / Rational::from_integer(lead.clone()));
        }
    }
    for (local, val) in x {
        preimage[block.cols[local]] = val;
    }
    Ok(Some(preimage))
}

/// Echelon form: `rows[i]` has its leading entry in column `pivots[i]`, and
/// pivots increase.
struct Echelon<T> {
    rows: Vec<Vec<(usize, T)>>,
    pivots: Vec<usize>,
}

/// Clears denominators in each row by its lcm; row scaling changes neither
/// rank nor kernel.
fn integer_rows(m: &ExactMatrix) -> Vec<IntRow> {
    m.rows()
        .iter()
        .filter(|row| !row.is_empty())
        .map(|row| {
            let l = row
                .iter()
                .fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
            row.iter()
                .map(|(c, v)| (*c, v.numer() * (&l / v.denom())))
                .collect()
        })
        .collect()
}

fn rational_rows(m: &ExactMatrix) -> Vec<RatRow> {
    m.rows().iter().filter(|r| !r.is_empty()).cloned().collect()
}

/// Fraction-free (Bareiss) forward elimination on sparse integer rows.
///
/// After a pivot `p` is chosen, every remaining row `r` becomes
/// `(p·r − r[col]·pivot_row) / prev`, where `prev` is the previous pivot;
/// the division is exact. Rows with no entry in the pivot column are still
/// rescaled by `p / prev`.
fn bareiss(rows: Vec<IntRow>, _ncols: usize) -> Echelon<BigInt> {
    let mut active: Vec<IntRow> = rows.into_iter().filter(|r| !r.is_empty()).collect();
    let mut out = Echelon {
        rows: Vec::new(),
        pivots: Vec::new(),
    };
    let mut prev = BigInt::one();
    while !active.is_empty() {
        let col = active.iter().map(|r| r[0].0).min().expect("nonempty");
        let pick = active
            .iter()
            .enumerate()
            .filter(|(_, r)| r[0].0 == col)
            .min_by_key(|(i, r)| (r.len(), *i))
            .map(|(i, _)| i)
            .expect("some row leads at col");
        let pivot_row = active.remove(pick);
        let p = pivot_row[0].1.clone();
        active = active
            .into_iter()
            .map(|row| bareiss_update(&row, &pivot_row, &p, &prev, col))
            .filter(|r| !r.is_empty())
            .collect();
        prev = p;
        out.pivots.push(col);
        out.rows.push(pivot_row);
    }
    out
}

fn bareiss_update(row: &IntRow, pivot: &IntRow, p: &BigInt, prev: &BigInt, col: usize) -> IntRow {
    let a = if row[0].0 == col {
        Some(&row[0].1)
    } else {
        None
    };
    let exact = |x: BigInt| -> BigInt {
        let (q, r) = x.div_rem(prev);
        debug_assert!(r.is_zero(), "inexact Bareiss division");
        q
    };
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    match a {
        None => {
            for (c, x) in row {
                let v = exact(p * x);
                if !v.is_zero() {
                    out.push((*c, v));
                }
            }
        }
        Some(a) => {
            let (mut i, mut j) = (0, 0);
            while i < row.len() || j < pivot.len() {
                let ci = row.get(i).map(|e| e.0).unwrap_or(usize::MAX);
                let cj = pivot.get(j).map(|e| e.0).unwrap_or(usize::MAX);
                let (c, v) = if ci < cj {
                    i += 1;
                    (ci, p * &row[i - 1].1)
                } else if cj < ci {
                    j += 1;
                    (cj, -(a * &pivot[j - 1].1))
                } else {
                    i += 1;
                    j += 1;
                    (ci, p * &row[i - 1].1 - a * &pivot[j - 1].1)
                };
                if c == col {
                    continue;
                }
                let v = exact(v);
                if !v.is_zero() {
                    out.push((c, v));
                }
            }
        }
    }
    out
}

/// Back substitution on a fraction-free echelon form: the kernel vector with
/// `x[free] = 1` and zero on the other free columns.
fn back_substitute(ech: &Echelon<BigInt>, free: usize, n: usize) -> Vector {
    let mut x: BTreeMap<usize, Rational> = BTreeMap::new();
    x.insert(free, Rational::one());
    for (row, &p) in ech.rows.iter().zip(&ech.pivots).rev() {
        let mut acc = Rational::zero();
        let mut lead = None;
        for (c, u) in row {
            if *c == p {
                lead = Some(u);
            } else if let Some(xc) = x.get(c) {
                acc -= xc * Rational::from_integer(u.clone());
            }
        }
        if !acc.is_zero() {
            let lead = lead.expect("pivot entry present");
            x.insert(p, acc / Rational::from_integer(lead.clone()));
        }
    }
    let mut v = zero_vector(n);
    for (c, val) in x {
        v[c] = val;
    }
    v
}

/// Completes a forward echelon form to reduced row echelon form.
fn gauss_jordan(ech: Echelon<Rational>) -> Echelon<Rational> {
    let Echelon { rows: mut done, pivots } = ech;
    // Clear entries above each pivot.
    for i in (0..done.len()).rev() {
        let p = pivots[i];
        let (above, below) = done.split_at_mut(i);
        let pivot_row = &below[0];
        for row in above.iter_mut() {
            if let Ok(pos) = row.binary_search_by_key(&p, |(c, _)| *c) {
                let factor = row[pos].1.clone();
                *row = axpy(row, &factor, pivot_row);
            }
        }
    }
    Echelon { rows: done, pivots }
}

/// Forward Gaussian elimination over the rationals; pivot rows are scaled
/// to a leading 1.
fn gauss_forward(rows: Vec<RatRow>) -> Echelon<Rational> {
    let mut active = rows;
    let mut done: Vec<RatRow> = Vec::new();
    let mut pivots = Vec::new();
    while !active.is_empty() {
        let col = active.iter().map(|r| r[0].0).min().expect("nonempty");
        let pick = active
            .iter()
            .enumerate()
            .filter(|(_, r)| r[0].0 == col)
            .min_by_key(|(i, r)| (r.len(), *i))
            .map(|(i, _)| i)
            .expect("some row leads at col");
        let mut pivot_row = active.remove(pick);
        let lead = pivot_row[0].1.clone();
        for (_, v) in pivot_row.iter_mut() {
            *v /= &lead;
        }
        active = active
            .into_iter()
            .map(|row| {
                if row[0].0 == col {
                    let factor = row[0].1.clone();
                    axpy(&row, &factor, &pivot_row)
                } else {
                    row
                }
            })
            .filter(|r| !r.is_empty())
            .collect();
        pivots.push(col);
        done.push(pivot_row);
    }
    Echelon { rows: done, pivots }
}

/// `row − factor · other` on sorted sparse rows.
fn axpy(row: &RatRow, factor: &Rational, other: &RatRow) -> RatRow {
    let mut out = Vec::with_capacity(row.len() + other.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < other.len() {
        let ci = row.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let cj = other.get(j).map(|e| e.0).unwrap_or(usize::MAX);
        let (c, v) = if ci < cj {
            i += 1;
            (ci, row[i - 1].1.clone())
        } else if cj < ci {
            j += 1;
            (cj, -(factor * &other[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (ci, &row[i - 1].1 - factor * &other[j - 1].1)
        };
        if !v.is_zero() {
            out.push((c, v));
        }
    }
    out
}
