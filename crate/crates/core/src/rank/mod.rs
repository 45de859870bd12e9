//! Tropical dependence, rank via maximal nonsingular minors, and witnesses.

use std::fmt;

use itertools::Itertools;
use num_traits::Zero;

use crate::determinant::{det_auto, guard};
use crate::error::{Result, TropError};
use crate::semiring::{MaxPlusScalar, Rational};
use crate::tensor::{TropMatrix, TropVector};

mod search;
mod witness;

pub use witness::{dependence_witness, square_witness, DependenceWitness, WitnessRoute};
pub(crate) use search::search_witness;

/// Rank computations enumerate minors; larger shapes are refused.
pub const RANK_LIMIT: usize = 8;

/// A square submatrix addressed by 1-based row and column index sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MinorLocation {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub size: usize,
}

impl MinorLocation {
    pub fn extract(&self, a: &TropMatrix) -> Result<TropMatrix> {
        a.submatrix(&self.rows, &self.cols)
    }
}

impl fmt::Display for MinorLocation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "rows {} cols {}",
            self.rows.iter().join(" "),
            self.cols.iter().join(" ")
        )
    }
}

fn guard_shape(op: &'static str, a: &TropMatrix) -> Result<()> {
    guard(op, a.rows(), RANK_LIMIT)?;
    guard(op, a.cols(), RANK_LIMIT)
}

/// First nonsingular minor of the largest possible size. Sizes run downward
/// from `min(m, n)`; within a size rows then columns go in lexicographic order.
pub fn max_nonsingular_minor(a: &TropMatrix) -> Result<Option<MinorLocation>> {
    guard_shape("rank", a)?;
    let (m, n) = a.shape();
    for k in (1..=m.min(n)).rev() {
        for rows in (0..m).combinations(k) {
            for cols in (0..n).combinations(k) {
                if det_auto(&a.submatrix0(&rows, &cols)).is_real() {
                    return Ok(Some(MinorLocation {
                        rows: rows.iter().map(|r| r + 1).collect(),
                        cols: cols.iter().map(|c| c + 1).collect(),
                        size: k,
                    }));
                }
            }
        }
    }
    Ok(None)
}

pub fn rank(a: &TropMatrix) -> Result<usize> {
    Ok(max_nonsingular_minor(a)?.map_or(0, |loc| loc.size))
}

/// Rank of a matrix over `R ∪ {-inf}` computed purely in max-plus terms: the
/// largest `k` with a `k x k` minor whose maximal permutation is finite and
/// attained exactly once.
pub fn rank_dss(a: &TropMatrix) -> Result<usize> {
    if !a.is_real_matrix() {
        return Err(TropError::GhostEntry);
    }
    guard_shape("rank", a)?;
    let (m, n) = a.shape();
    let pi: Vec<Vec<MaxPlusScalar>> = (0..m)
        .map(|r| (0..n).map(|c| a.at(r, c).realize()).collect())
        .collect();
    for k in (1..=m.min(n)).rev() {
        for rows in (0..m).combinations(k) {
            for cols in (0..n).combinations(k) {
                if strictly_attained(&pi, &rows, &cols) {
                    return Ok(k);
                }
            }
        }
    }
    Ok(0)
}

fn strictly_attained(pi: &[Vec<MaxPlusScalar>], rows: &[usize], cols: &[usize]) -> bool {
    let mut best: Option<Rational> = None;
    let mut count = 0usize;
    for perm in cols.iter().permutations(cols.len()) {
        let mut total = Rational::zero();
        let mut finite = true;
        for (&r, &&c) in rows.iter().zip(&perm) {
            match pi[r][c].value() {
                Some(v) => total += v,
                None => {
                    finite = false;
                    break;
                }
            }
        }
        if !finite {
            continue;
        }
        match best.as_ref().map(|b| total.cmp(b)) {
            None | Some(std::cmp::Ordering::Greater) => {
                best = Some(total);
                count = 1;
            }
            Some(std::cmp::Ordering::Equal) => count += 1,
            Some(std::cmp::Ordering::Less) => {}
        }
    }
    count == 1
}

pub(crate) fn matrix_of(vectors: &[TropVector]) -> Result<TropMatrix> {
    if vectors.is_empty() {
        return Err(TropError::Empty("vector list"));
    }
    TropMatrix::from_vectors(vectors)
}

pub fn is_dependent(vectors: &[TropVector]) -> Result<bool> {
    let a = matrix_of(vectors)?;
    if vectors.iter().any(TropVector::is_ghost_vector) || a.rows() > a.cols() {
        return Ok(true);
    }
    Ok(rank(&a)? < a.rows())
}
