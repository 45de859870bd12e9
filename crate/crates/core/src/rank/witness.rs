//! Constructive dependence witnesses.
//!
//! Constructions follow the minor-expansion argument for square matrices,
//! the rank-defect reduction when `|A| = -inf`, duplication of a column for
//! more rows than columns, and column splitting for fewer. Every candidate is
//! validated; when a construction does not validate, an exact search over
//! coefficient supports supplies the witness instead.

use std::fmt;

use itertools::Itertools;

use super::search::search_witness;
use super::{matrix_of, rank, RANK_LIMIT};
use crate::determinant::{det_auto, guard, lex_least_achieving, rank_defect_certificate};
use crate::error::{Result, TropError};
use crate::semiring::{MaxPlusScalar, TropScalar};
use crate::tensor::{TropMatrix, TropVector};

/// Which construction produced a witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WitnessRoute {
    GhostVector,
    MinorExpansion,
    RankDefect,
    ColumnDuplication,
    ColumnSplit,
    Search,
}

impl fmt::Display for WitnessRoute {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WitnessRoute::GhostVector => "ghost-vector",
            WitnessRoute::MinorExpansion => "minor-expansion",
            WitnessRoute::RankDefect => "rank-defect",
            WitnessRoute::ColumnDuplication => "column-duplication",
            WitnessRoute::ColumnSplit => "column-split",
            WitnessRoute::Search => "search",
        })
    }
}

/// Coefficients in `R ∪ {-inf}`, one per row, not all `-inf`, whose
/// combination of the rows is a ghost vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DependenceWitness {
    pub coefficients: Vec<MaxPlusScalar>,
    pub route: WitnessRoute,
}

impl DependenceWitness {
    /// `⊕_i α_i ⊙ v_i`.
    pub fn combination(&self, vectors: &[TropVector]) -> Result<TropVector> {
        let a = matrix_of(vectors)?;
        if a.rows() != self.coefficients.len() {
            return Err(TropError::LengthMismatch {
                expected: self.coefficients.len(),
                found: a.rows(),
            });
        }
        Ok(combine(&a, &self.coefficients))
    }

    pub fn validate(&self, vectors: &[TropVector]) -> bool {
        matrix_of(vectors).is_ok_and(|a| {
            a.rows() == self.coefficients.len() && validates(&a, &self.coefficients)
        })
    }
}

impl fmt::Display for DependenceWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coefficients.iter().join(" "))
    }
}

pub(crate) fn combine(a: &TropMatrix, alpha: &[MaxPlusScalar]) -> TropVector {
    let entries = (0..a.cols())
        .map(|c| {
            (0..a.rows())
                .map(|r| TropScalar::from_max_plus(&alpha[r]).otimes(a.at(r, c)))
                .sum()
        })
        .collect();
    TropVector::new(entries).expect("nonempty")
}

pub(crate) fn validates(a: &TropMatrix, alpha: &[MaxPlusScalar]) -> bool {
    alpha.len() == a.rows()
        && alpha.iter().any(|x| !x.is_neg_inf())
        && combine(a, alpha).is_ghost_vector()
}

type Attempt = Option<(Vec<MaxPlusScalar>, WitnessRoute)>;

fn checked(a: &TropMatrix, alpha: Vec<MaxPlusScalar>, route: WitnessRoute) -> Attempt {
    validates(a, &alpha).then_some((alpha, route))
}

fn pad(m: usize, rows: &[usize], sub: &[MaxPlusScalar]) -> Vec<MaxPlusScalar> {
    let mut alpha = vec![MaxPlusScalar::NegInf; m];
    for (&r, x) in rows.iter().zip(sub) {
        alpha[r] = x.clone();
    }
    alpha
}

fn construct(a: &TropMatrix, depth: usize) -> Attempt {
    if depth == 0 {
        return None;
    }
    let (m, n) = a.shape();
    if m > n {
        let rows: Vec<usize> = (0..=n).collect();
        let mut cols: Vec<usize> = (0..n).collect();
        cols.push(0);
        let square = a.submatrix0(&rows, &cols);
        let (sub, _) = construct_square(&square, depth - 1)?;
        return checked(a, pad(m, &rows, &sub), WitnessRoute::ColumnDuplication);
    }
    if m == n {
        return construct_square(a, depth);
    }
    column_split(a, depth)
}

fn construct_square(a: &TropMatrix, depth: usize) -> Attempt {
    let n = a.rows();
    let d = det_auto(a);
    if d.is_real() {
        return None;
    }
    if n == 1 {
        return checked(a, vec![MaxPlusScalar::finite(0)], WitnessRoute::MinorExpansion);
    }
    if d.is_neg_inf() {
        rank_defect_case(a, depth)
    } else {
        minor_expansion_case(a)
    }
}

/// `|A|` is a finite ghost. Columns are permuted so the lexicographically
/// least achieving permutation becomes the diagonal, the least singular
/// principal submatrix is located, and its first column drives the minors.
fn minor_expansion_case(a: &TropMatrix) -> Attempt {
    let n = a.rows();
    let sigma = lex_least_achieving(a)?;
    let all: Vec<usize> = (0..n).collect();
    let b = a.submatrix0(&all, &sigma);
    let principal = (1..=n)
        .flat_map(|k| (0..n).combinations(k))
        .find(|s| det_auto(&b.submatrix0(s, s)).is_ghost())?;
    let lead = principal[0];

    let full: Vec<MaxPlusScalar> = (0..n)
        .map(|i| det_auto(&a.minor0(i, sigma[lead])).realize())
        .collect();
    if let Some(found) = checked(a, full, WitnessRoute::MinorExpansion) {
        return Some(found);
    }

    let k = principal.len();
    if k == 1 {
        return checked(a, pad(n, &[lead], &[MaxPlusScalar::finite(0)]), WitnessRoute::MinorExpansion);
    }
    let sub = b.submatrix0(&principal, &principal);
    let local: Vec<MaxPlusScalar> = (0..k).map(|i| det_auto(&sub.minor0(i, 0)).realize()).collect();
    checked(a, pad(n, &principal, &local), WitnessRoute::MinorExpansion)
}

/// `|A| = -inf`: `k` certificate rows have at most `k - 1` finite columns,
/// so they are dependent as shorter vectors.
fn rank_defect_case(a: &TropMatrix, depth: usize) -> Attempt {
    let n = a.rows();
    let cert = rank_defect_certificate(a).ok()??;
    let rows: Vec<usize> = cert.rows.iter().map(|r| r - 1).collect();
    let finite: Vec<usize> = (0..n)
        .filter(|&c| rows.iter().any(|&r| !a.at(r, c).is_neg_inf()))
        .collect();
    if finite.is_empty() {
        let zeros = vec![MaxPlusScalar::finite(0); rows.len()];
        return checked(a, pad(n, &rows, &zeros), WitnessRoute::RankDefect);
    }
    let (sub, _) = construct(&a.submatrix0(&rows, &finite), depth - 1)?;
    checked(a, pad(n, &rows, &sub), WitnessRoute::RankDefect)
}

/// Fewer rows than columns. Witnesses of the rows with the last or first
/// column removed leave at most one non-ghost coordinate each; a dependence
/// of those two leftover coordinates combines them.
fn column_split(a: &TropMatrix, depth: usize) -> Attempt {
    let (m, n) = a.shape();
    let all_rows: Vec<usize> = (0..m).collect();
    let left = a.submatrix0(&all_rows, &(0..n - 1).collect_vec());
    let right = a.submatrix0(&all_rows, &(1..n).collect_vec());
    let mut parts = Vec::new();
    for part in [&left, &right] {
        if rank(part).ok()? >= m {
            return None;
        }
        let (alpha, _) = construct(part, depth - 1)?;
        if let Some(found) = checked(a, alpha.clone(), WitnessRoute::ColumnSplit) {
            return Some(found);
        }
        parts.push(alpha);
    }
    let u = combine(a, &parts[0]);
    let w = combine(a, &parts[1]);
    let pick = |v: &TropVector, c: usize| v.entries()[c].clone();
    let b = TropMatrix::from_rows(vec![
        vec![pick(&u, 0), pick(&u, n - 1)],
        vec![pick(&w, 0), pick(&w, n - 1)],
    ])
    .expect("2x2");
    let mu = construct_square(&b, depth - 1)
        .map(|(mu, _)| mu)
        .or_else(|| search_witness(&b, false))?;
    let alpha = (0..m)
        .map(|i| mu[0].plus(&parts[0][i]).max_with(&mu[1].plus(&parts[1][i])))
        .collect();
    checked(a, alpha, WitnessRoute::ColumnSplit)
}

fn budget(a: &TropMatrix) -> usize {
    3 * (a.rows() + a.cols())
}

fn finish(a: &TropMatrix, attempt: Attempt) -> Result<DependenceWitness> {
    let (coefficients, route) = attempt
        .or_else(|| search_witness(a, false).map(|alpha| (alpha, WitnessRoute::Search)))
        .ok_or_else(|| TropError::Validation("no witness for dependent rows".into()))?;
    if !validates(a, &coefficients) {
        return Err(TropError::Validation(format!(
            "witness {} does not validate",
            coefficients.iter().join(" ")
        )));
    }
    Ok(DependenceWitness { coefficients, route })
}

/// A witness for the rows of a singular square matrix.
pub fn square_witness(a: &TropMatrix) -> Result<DependenceWitness> {
    let n = a.require_square()?;
    guard("witness", n, RANK_LIMIT)?;
    if det_auto(a).is_real() {
        return Err(TropError::Nonsingular);
    }
    finish(a, construct_square(a, budget(a)))
}

/// Shifts the coefficients so the last real one is `0`.
fn normalized(mut w: DependenceWitness) -> DependenceWitness {
    if let Some(shift) = w.coefficients.iter().rev().find_map(MaxPlusScalar::value).cloned() {
        let shift = MaxPlusScalar::Finite(-shift);
        for x in &mut w.coefficients {
            *x = x.plus(&shift);
        }
    }
    w
}

/// A witness for a dependent list of vectors, scaled so that its last real
/// coefficient is `0`.
pub fn dependence_witness(vectors: &[TropVector]) -> Result<DependenceWitness> {
    let a = matrix_of(vectors)?;
    let (m, n) = a.shape();
    if let Some(g) = vectors.iter().position(TropVector::is_ghost_vector) {
        return Ok(DependenceWitness {
            coefficients: pad(m, &[g], &[MaxPlusScalar::finite(0)]),
            route: WitnessRoute::GhostVector,
        });
    }
    guard("witness", n, RANK_LIMIT)?;
    if m > n {
        let rows: Vec<usize> = (0..=n).collect();
        let head = a.submatrix0(&rows, &(0..n).collect_vec());
        let inner = finish(&head, construct(&head, budget(&head)))?;
        let coefficients = pad(m, &rows, &inner.coefficients);
        return finish(&a, Some((coefficients, inner.route))).map(normalized);
    }
    if rank(&a)? == m {
        return Err(TropError::NotDependent);
    }
    finish(&a, construct(&a, budget(&a))).map(normalized)
}
