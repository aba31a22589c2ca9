//! Exact rational linear algebra on sparse matrices that carry their domain
//! and codomain tensor spaces.

mod elim;

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rep::{Character, TensorSpace};

pub use elim::{
    components, in_column_space, kernel_basis, kernel_basis_with, rank, rank_with, Block,
    Eliminator, Strategy,
};

/// Exact rational number in lowest terms with positive denominator.
pub type Rational = BigRational;

/// Dense exact vector.
pub type Vector = Vec<Rational>;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero_vector(len: usize) -> Vector {
    vec![Rational::zero(); len]
}

pub fn int_vector(xs: &[i64]) -> Vector {
    xs.iter().map(|&x| rat(x)).collect()
}

/// Serializes a rational as its `p/q` (or `p`) string.
pub fn serialize_rational<S: serde::Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(q)
}

/// A sparse rational matrix `codomain ← domain`.
///
/// Rows are stored as column-sorted lists of nonzero entries, so two matrices
/// are equal exactly when their spaces and their entries agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    domain: TensorSpace,
    codomain: TensorSpace,
    rows: Vec<Vec<(usize, Rational)>>,
}

impl ExactMatrix {
    pub fn zero(domain: TensorSpace, codomain: TensorSpace) -> Self {
        let rows = vec![Vec::new(); codomain.dim()];
        ExactMatrix {
            domain,
            codomain,
            rows,
        }
    }

    pub fn identity(space: TensorSpace) -> Self {
        let rows = (0..space.dim()).map(|i| vec![(i, Rational::one())]).collect();
        ExactMatrix {
            domain: space.clone(),
            codomain: space,
            rows,
        }
    }

    /// Builds a matrix from `(row, col, value)` triplets. Repeated positions
    /// are summed; entries that cancel to zero are dropped.
    pub fn from_entries<I>(domain: TensorSpace, codomain: TensorSpace, entries: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, Rational)>,
    {
        let (nr, nc) = (codomain.dim(), domain.dim());
        let mut acc: Vec<BTreeMap<usize, Rational>> = vec![BTreeMap::new(); nr];
        for (r, c, v) in entries {
            assert!(r < nr && c < nc, "entry ({r},{c}) outside {nr}x{nc}");
            if v.is_zero() {
                continue;
            }
            let slot = acc[r].entry(c).or_insert_with(Rational::zero);
            *slot += v;
        }
        let rows = acc
            .into_iter()
            .map(|row| row.into_iter().filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        ExactMatrix {
            domain,
            codomain,
            rows,
        }
    }

    /// Integer matrix on coordinate spaces; `rows` is row-major.
    pub fn from_int_rows(ncols: usize, rows: &[Vec<i64>]) -> Self {
        Self::from_rational_rows(
            ncols,
            &rows.iter().map(|r| int_vector(r)).collect::<Vec<_>>(),
        )
    }

    pub fn from_rational_rows(ncols: usize, rows: &[Vector]) -> Self {
        let entries = rows.iter().enumerate().flat_map(|(r, row)| {
            assert_eq!(row.len(), ncols, "ragged row {r}");
            row.iter().enumerate().map(move |(c, v)| (r, c, v.clone()))
        });
        Self::from_entries(
            TensorSpace::coords(ncols),
            TensorSpace::coords(rows.len()),
            entries,
        )
    }

    /// Matrix whose columns are the given vectors, on coordinate spaces.
    pub fn from_columns(nrows: usize, cols: &[Vector]) -> Self {
        let entries = cols.iter().enumerate().flat_map(|(c, col)| {
            assert_eq!(col.len(), nrows, "column {c} has wrong length");
            col.iter().enumerate().map(move |(r, v)| (r, c, v.clone()))
        });
        Self::from_entries(TensorSpace::coords(cols.len()), TensorSpace::coords(nrows), entries)
    }

    /// Re-attaches space metadata of matching dimensions.
    pub fn relabel(self, domain: TensorSpace, codomain: TensorSpace) -> Result<Self> {
        if domain.dim() != self.ncols() || codomain.dim() != self.nrows() {
            return Err(Error::DimensionMismatch(format!(
                "cannot relabel {}x{} matrix as {} -> {}",
                self.nrows(),
                self.ncols(),
                domain,
                codomain
            )));
        }
        Ok(ExactMatrix {
            domain,
            codomain,
            rows: self.rows,
        })
    }

    pub fn domain(&self) -> &TensorSpace {
        &self.domain
    }

    pub fn codomain(&self) -> &TensorSpace {
        &self.codomain
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.domain.dim()
    }

    pub fn row(&self, r: usize) -> &[(usize, Rational)] {
        &self.rows[r]
    }

    pub fn rows(&self) -> &[Vec<(usize, Rational)>] {
        &self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        match self.rows[r].binary_search_by_key(&c, |(j, _)| *j) {
            Ok(pos) => self.rows[r][pos].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, *c, v)))
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    /// Returns a copy with entry `(r, c)` replaced by `value`.
    pub fn with_entry(&self, r: usize, c: usize, value: Rational) -> Self {
        let mut out = self.clone();
        let row = &mut out.rows[r];
        match row.binary_search_by_key(&c, |(j, _)| *j) {
            Ok(pos) if value.is_zero() => {
                row.remove(pos);
            }
            Ok(pos) => row[pos].1 = value,
            Err(_) if value.is_zero() => {}
            Err(pos) => row.insert(pos, (c, value)),
        }
        out
    }

    pub fn to_dense(&self) -> Vec<Vector> {
        self.rows
            .iter()
            .map(|row| {
                let mut dense = zero_vector(self.ncols());
                for (c, v) in row {
                    dense[*c] = v.clone();
                }
                dense
            })
            .collect()
    }

    /// The dual map: transpose matrix between the dual spaces.
    pub fn transpose(&self) -> Self {
        let mut rows = vec![Vec::new(); self.ncols()];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, v) in row {
                rows[*c].push((r, v.clone()));
            }
        }
        ExactMatrix {
            domain: self.codomain.dual(),
            codomain: self.domain.dual(),
            rows,
        }
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &ExactMatrix) -> Result<Self> {
        if self.domain != g.codomain {
            return Err(Error::DimensionMismatch(format!(
                "cannot compose ({} -> {}) after ({} -> {})",
                self.domain, self.codomain, g.domain, g.codomain
            )));
        }
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut acc: HashMap<usize, Rational> = HashMap::new();
                for (j, a) in row {
                    for (c, b) in &g.rows[*j] {
                        *acc.entry(*c).or_insert_with(Rational::zero) += a * b;
                    }
                }
                let mut out: Vec<_> = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
                out.sort_by_key(|(c, _)| *c);
                out
            })
            .collect();
        Ok(ExactMatrix {
            domain: g.domain.clone(),
            codomain: self.codomain.clone(),
            rows,
        })
    }

    /// Kronecker product, consistent with row-major tensor indexing:
    /// `(f ⊗ g)(x ⊗ y) = f(x) ⊗ g(y)`.
    pub fn kron(&self, g: &ExactMatrix) -> Self {
        let (gr, gc) = (g.nrows(), g.ncols());
        let mut rows = Vec::with_capacity(self.nrows() * gr);
        for frow in &self.rows {
            for grow in &g.rows {
                let mut row = Vec::with_capacity(frow.len() * grow.len());
                for (c1, a) in frow {
                    for (c2, b) in grow {
                        row.push((c1 * gc + c2, a * b));
                    }
                }
                rows.push(row);
            }
        }
        ExactMatrix {
            domain: self.domain.tensor(&g.domain),
            codomain: self.codomain.tensor(&g.codomain),
            rows,
        }
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vector> {
        if v.len() != self.ncols() {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.ncols()
            )));
        }
        Ok(self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .filter(|(c, _)| !v[*c].is_zero())
                    .fold(Rational::zero(), |acc, (c, a)| acc + a * &v[*c])
            })
            .collect())
    }

    pub fn add(&self, other: &ExactMatrix) -> Result<Self> {
        if self.domain != other.domain || self.codomain != other.codomain {
            return Err(Error::DimensionMismatch("sum of maps between different spaces".into()));
        }
        let entries = self
            .entries()
            .chain(other.entries())
            .map(|(r, c, v)| (r, c, v.clone()))
            .collect::<Vec<_>>();
        Ok(Self::from_entries(self.domain.clone(), self.codomain.clone(), entries))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        let entries = self
            .entries()
            .map(|(r, c, v)| (r, c, v * s))
            .collect::<Vec<_>>();
        Self::from_entries(self.domain.clone(), self.codomain.clone(), entries)
    }

    /// Submatrix on the given rows and columns, on coordinate spaces.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let col_pos: HashMap<usize, usize> =
            cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let entries = rows.iter().enumerate().flat_map(|(i, &r)| {
            let col_pos = &col_pos;
            self.rows[r]
                .iter()
                .filter_map(move |(c, v)| col_pos.get(c).map(|&j| (i, j, v.clone())))
        });
        Self::from_entries(
            TensorSpace::coords(cols.len()),
            TensorSpace::coords(rows.len()),
            entries.collect::<Vec<_>>(),
        )
    }

    /// True when every nonzero entry connects basis vectors of equal weight.
    pub fn is_weight_homogeneous(&self) -> bool {
        let dw = self.domain.weights();
        let cw = self.codomain.weights();
        self.entries().all(|(r, c, _)| cw[r] == dw[c])
    }

    /// Row and column index sets per weight, for a weight-homogeneous map.
    pub fn weight_blocks(&self) -> BTreeMap<i64, (Vec<usize>, Vec<usize>)> {
        let mut blocks: BTreeMap<i64, (Vec<usize>, Vec<usize>)> = BTreeMap::new();
        for (r, w) in self.codomain.weights().into_iter().enumerate() {
            blocks.entry(w).or_default().0.push(r);
        }
        for (c, w) in self.domain.weights().into_iter().enumerate() {
            blocks.entry(w).or_default().1.push(c);
        }
        blocks
    }

    /// Character of the kernel, from blockwise ranks of a weight-homogeneous
    /// map. Fails if the map mixes weights.
    pub fn kernel_character(&self) -> Result<Character> {
        if !self.is_weight_homogeneous() {
            return Err(Error::DimensionMismatch(
                "kernel character needs a weight-homogeneous map".into(),
            ));
        }
        let mut ch = Character::zero();
        for (w, (rows, cols)) in self.weight_blocks() {
            let block = self.submatrix(&rows, &cols);
            let nullity = cols.len() - rank(&block);
            ch.add_term(w, nullity as i64);
        }
        Ok(ch)
    }

    /// Character of the image, from blockwise ranks.
    pub fn image_character(&self) -> Result<Character> {
        Ok(self.domain.character().sub(&self.kernel_character()?))
    }
}
