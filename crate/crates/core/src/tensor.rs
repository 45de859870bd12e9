//! Dense vectors and matrices over `T`.
//!
//! All index arguments in this module's public API are 1-based.

use std::fmt;
use std::str::FromStr;

use crate::error::{Result, TropError};
use crate::semiring::TropScalar;

/// A fixed-length tuple of supertropical values.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TropVector {
    entries: Vec<TropScalar>,
}

impl TropVector {
    pub fn new(entries: Vec<TropScalar>) -> Result<Self> {
        if entries.is_empty() {
            return Err(TropError::Empty("vector"));
        }
        Ok(TropVector { entries })
    }

    pub fn from_ints(values: &[i64]) -> Self {
        TropVector {
            entries: values.iter().map(|&v| TropScalar::real(v)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[TropScalar] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<TropScalar> {
        self.entries
    }

    /// 1-based coordinate access.
    pub fn get(&self, i: usize) -> Result<&TropScalar> {
        check_index(i, self.len())?;
        Ok(&self.entries[i - 1])
    }

    /// Every coordinate is a ghost or `-inf`.
    pub fn is_ghost_vector(&self) -> bool {
        self.entries.iter().all(TropScalar::is_ghost)
    }

    pub fn is_real_vector(&self) -> bool {
        self.entries.iter().all(TropScalar::is_real)
    }

    pub fn scale(&self, x: &TropScalar) -> TropVector {
        TropVector {
            entries: self.entries.iter().map(|e| x.otimes(e)).collect(),
        }
    }

    pub fn oplus(&self, other: &TropVector) -> Result<TropVector> {
        if self.len() != other.len() {
            return Err(TropError::LengthMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(TropVector {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.oplus(b))
                .collect(),
        })
    }
}

impl fmt::Display for TropVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.entries)
    }
}

fn write_joined(f: &mut fmt::Formatter<'_>, xs: &[TropScalar]) -> fmt::Result {
    for (k, x) in xs.iter().enumerate() {
        if k > 0 {
            f.write_str(" ")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

pub(crate) fn check_index(i: usize, bound: usize) -> Result<()> {
    if i == 0 || i > bound {
        Err(TropError::IndexOutOfRange { index: i, bound })
    } else {
        Ok(())
    }
}

/// A dense `m x n` matrix over `T`, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TropMatrix {
    rows: usize,
    cols: usize,
    data: Vec<TropScalar>,
}

impl TropMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<TropScalar>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(TropError::Empty("matrix"));
        }
        if data.len() != rows * cols {
            return Err(TropError::LengthMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(TropMatrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<TropScalar>>) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(TropError::LengthMismatch {
                expected: n,
                found: bad.len(),
            });
        }
        TropMatrix::new(m, n, rows.into_iter().flatten().collect())
    }

    pub fn from_vectors(vectors: &[TropVector]) -> Result<Self> {
        TropMatrix::from_rows(vectors.iter().map(|v| v.entries().to_vec()).collect())
    }

    /// Builds a real matrix from integer rows; panics on ragged input.
    pub fn from_ints<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        TropMatrix::from_rows(
            rows.iter()
                .map(|r| r.as_ref().iter().map(|&v| TropScalar::real(v)).collect())
                .collect(),
        )
        .expect("rectangular integer rows")
    }

    pub(crate) fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> TropScalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        TropMatrix { rows, cols, data }
    }

    /// The multiplicative unit `I`.
    pub fn identity(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(TropError::Empty("matrix"));
        }
        Ok(TropMatrix::from_fn(n, n, |r, c| {
            if r == c {
                TropScalar::one()
            } else {
                TropScalar::NegInf
            }
        }))
    }

    /// The all-`-inf` matrix `Z`.
    pub fn zero_matrix(rows: usize, cols: usize) -> Result<Self> {
        TropMatrix::new(rows, cols, vec![TropScalar::NegInf; rows * cols])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub(crate) fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(TropError::NonSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// 0-based access for internal loops.
    #[inline]
    pub(crate) fn at(&self, r: usize, c: usize) -> &TropScalar {
        &self.data[r * self.cols + c]
    }

    pub(crate) fn row_slice(&self, r: usize) -> &[TropScalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Entry `a_{i,j}`, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> Result<&TropScalar> {
        check_index(i, self.rows)?;
        check_index(j, self.cols)?;
        Ok(self.at(i - 1, j - 1))
    }

    /// Row `i`, 1-based.
    pub fn row(&self, i: usize) -> Result<TropVector> {
        check_index(i, self.rows)?;
        Ok(TropVector {
            entries: self.row_slice(i - 1).to_vec(),
        })
    }

    /// Column `j`, 1-based.
    pub fn column(&self, j: usize) -> Result<TropVector> {
        check_index(j, self.cols)?;
        Ok(TropVector {
            entries: (0..self.rows).map(|r| self.at(r, j - 1).clone()).collect(),
        })
    }

    pub fn row_vectors(&self) -> Vec<TropVector> {
        (0..self.rows)
            .map(|r| TropVector {
                entries: self.row_slice(r).to_vec(),
            })
            .collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = &TropScalar> {
        self.data.iter()
    }

    pub fn mat_add(&self, other: &TropMatrix) -> Result<TropMatrix> {
        if self.shape() != other.shape() {
            return Err(self.mismatch(other));
        }
        Ok(TropMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.oplus(b))
                .collect(),
        })
    }

    pub fn mat_mul(&self, other: &TropMatrix) -> Result<TropMatrix> {
        if self.cols != other.rows {
            return Err(self.mismatch(other));
        }
        Ok(TropMatrix::from_fn(self.rows, other.cols, |r, c| {
            (0..self.cols)
                .map(|k| self.at(r, k).otimes(other.at(k, c)))
                .sum()
        }))
    }

    /// Entrywise product `x A`, which equals `A x`.
    pub fn scale(&self, x: &TropScalar) -> TropMatrix {
        TropMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| x.otimes(a)).collect(),
        }
    }

    /// Multiplies row `i` (1-based) by `x`.
    pub fn scale_row(&self, i: usize, x: &TropScalar) -> Result<TropMatrix> {
        check_index(i, self.rows)?;
        let mut out = self.clone();
        for c in 0..self.cols {
            out.data[(i - 1) * self.cols + c] = x.otimes(self.at(i - 1, c));
        }
        Ok(out)
    }

    /// Multiplies column `j` (1-based) by `x`.
    pub fn scale_col(&self, j: usize, x: &TropScalar) -> Result<TropMatrix> {
        check_index(j, self.cols)?;
        let mut out = self.clone();
        for r in 0..self.rows {
            out.data[r * self.cols + j - 1] = x.otimes(self.at(r, j - 1));
        }
        Ok(out)
    }

    pub fn transpose(&self) -> TropMatrix {
        TropMatrix::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    /// `A_{i,j}`: delete row `i` and column `j` (1-based).
    pub fn minor(&self, i: usize, j: usize) -> Result<TropMatrix> {
        check_index(i, self.rows)?;
        check_index(j, self.cols)?;
        if self.rows < 2 || self.cols < 2 {
            return Err(TropError::SizeGuard {
                op: "minor",
                size: self.rows.min(self.cols),
                limit: 2,
            });
        }
        Ok(self.minor0(i - 1, j - 1))
    }

    pub(crate) fn minor0(&self, r: usize, c: usize) -> TropMatrix {
        TropMatrix::from_fn(self.rows - 1, self.cols - 1, |a, b| {
            let ra = if a < r { a } else { a + 1 };
            let cb = if b < c { b } else { b + 1 };
            self.at(ra, cb).clone()
        })
    }

    /// Submatrix on the given 1-based row and column index lists, in the order given.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<TropMatrix> {
        for &i in rows {
            check_index(i, self.rows)?;
        }
        for &j in cols {
            check_index(j, self.cols)?;
        }
        if rows.is_empty() || cols.is_empty() {
            return Err(TropError::Empty("submatrix index set"));
        }
        Ok(TropMatrix::from_fn(rows.len(), cols.len(), |a, b| {
            self.at(rows[a] - 1, cols[b] - 1).clone()
        }))
    }

    pub(crate) fn submatrix0(&self, rows: &[usize], cols: &[usize]) -> TropMatrix {
        TropMatrix::from_fn(rows.len(), cols.len(), |a, b| self.at(rows[a], cols[b]).clone())
    }

    /// Reorders rows so that new row `k` is old row `order[k]` (1-based values).
    pub fn permute_rows(&self, order: &[usize]) -> Result<TropMatrix> {
        let cols: Vec<usize> = (1..=self.cols).collect();
        check_permutation(order, self.rows)?;
        self.submatrix(order, &cols)
    }

    /// Reorders columns so that new column `k` is old column `order[k]` (1-based values).
    pub fn permute_cols(&self, order: &[usize]) -> Result<TropMatrix> {
        let rows: Vec<usize> = (1..=self.rows).collect();
        check_permutation(order, self.cols)?;
        self.submatrix(&rows, order)
    }

    /// Every entry lies in `R ∪ {-inf}`.
    pub fn is_real_matrix(&self) -> bool {
        self.data.iter().all(|a| !matches!(a, TropScalar::Ghost(_)))
    }

    /// Every entry lies in the ghost part.
    pub fn is_ghost_matrix(&self) -> bool {
        self.data.iter().all(TropScalar::is_ghost)
    }

    /// Entrywise π, kept inside `T` as real values.
    pub fn project_matrix(&self) -> TropMatrix {
        self.map(|a| TropScalar::from_max_plus(&a.realize()))
    }

    /// Entrywise ν.
    pub fn ghostify_matrix(&self) -> TropMatrix {
        self.map(TropScalar::ghost)
    }

    pub fn map(&self, f: impl Fn(&TropScalar) -> TropScalar) -> TropMatrix {
        TropMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    fn mismatch(&self, other: &TropMatrix) -> TropError {
        TropError::ShapeMismatch {
            left_rows: self.rows,
            left_cols: self.cols,
            right_rows: other.rows,
            right_cols: other.cols,
        }
    }
}

fn check_permutation(order: &[usize], n: usize) -> Result<()> {
    if order.len() != n {
        return Err(TropError::LengthMismatch {
            expected: n,
            found: order.len(),
        });
    }
    let mut seen = vec![false; n];
    for &k in order {
        check_index(k, n)?;
        if std::mem::replace(&mut seen[k - 1], true) {
            return Err(TropError::IndexOutOfRange { index: k, bound: n });
        }
    }
    Ok(())
}

/// `a b; c d` literal form, rows separated by `;` or newlines.
impl FromStr for TropMatrix {
    type Err = TropError;

    fn from_str(text: &str) -> Result<Self> {
        let rows = text
            .split([';', '\n'])
            .map(str::trim)
            .filter(|r| !r.is_empty())
            .map(|r| r.split_whitespace().map(str::parse).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        TropMatrix::from_rows(rows)
    }
}

impl fmt::Display for TropMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            if r > 0 {
                f.write_str("\n")?;
            }
            write_joined(f, self.row_slice(r))?;
        }
        Ok(())
    }
}
