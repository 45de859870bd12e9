//! The tropical determinant (a permanent), singularity, the adjoint and
//! `-inf` certificates.
//!
//! Three independent evaluation routes are provided: exhaustive permutation
//! enumeration, recursive Laplace expansion, and an assignment-problem path
//! that decides the ghost tag by re-solving with each optimal cell removed.

use std::fmt;
use std::str::FromStr;

use crate::assignment::{alternating_reach, support_matching, AssignmentProblem};
use crate::error::{Result, TropError};
use crate::semiring::{Rational, TropScalar};
use crate::tensor::{check_index, TropMatrix};

/// Largest size accepted by exhaustive enumeration.
pub const BRUTE_LIMIT: usize = 10;
/// `Auto` enumerates up to this size and switches to the assignment path above it.
pub const AUTO_BRUTE_MAX: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum DetMethod {
    Brute,
    Expand,
    Fast,
    #[default]
    Auto,
}

impl FromStr for DetMethod {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "brute" => Ok(DetMethod::Brute),
            "expand" => Ok(DetMethod::Expand),
            "fast" => Ok(DetMethod::Fast),
            "auto" => Ok(DetMethod::Auto),
            other => Err(format!("unknown method {other:?} (brute|expand|fast|auto)")),
        }
    }
}

impl fmt::Display for DetMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DetMethod::Brute => "brute",
            DetMethod::Expand => "expand",
            DetMethod::Fast => "fast",
            DetMethod::Auto => "auto",
        })
    }
}

/// `|A|` by the chosen method. All methods agree exactly.
pub fn det(a: &TropMatrix, method: DetMethod) -> Result<TropScalar> {
    let n = a.require_square()?;
    match method {
        DetMethod::Brute => {
            guard("brute determinant", n, BRUTE_LIMIT)?;
            Ok(det_brute(a))
        }
        DetMethod::Expand => {
            guard("expansion determinant", n, BRUTE_LIMIT)?;
            Ok(det_laplace(a))
        }
        DetMethod::Fast => Ok(det_fast(a)),
        DetMethod::Auto if n <= AUTO_BRUTE_MAX => Ok(det_brute(a)),
        DetMethod::Auto => Ok(det_fast(a)),
    }
}

pub(crate) fn det_auto(a: &TropMatrix) -> TropScalar {
    if a.rows() <= AUTO_BRUTE_MAX {
        det_brute(a)
    } else {
        det_fast(a)
    }
}

pub(crate) fn guard(op: &'static str, size: usize, limit: usize) -> Result<()> {
    if size > limit {
        Err(TropError::SizeGuard { op, size, limit })
    } else {
        Ok(())
    }
}

/// ⊕ over all `n!` permutation products, by depth-first extension of partial products.
fn det_brute(a: &TropMatrix) -> TropScalar {
    fn walk(a: &TropMatrix, row: usize, used: &mut [bool], partial: &TropScalar, acc: &mut TropScalar) {
        let n = a.rows();
        if row == n {
            *acc = acc.oplus(partial);
            return;
        }
        for c in 0..n {
            if used[c] || a.at(row, c).is_neg_inf() {
                continue;
            }
            used[c] = true;
            walk(a, row + 1, used, &partial.otimes(a.at(row, c)), acc);
            used[c] = false;
        }
    }
    let mut acc = TropScalar::NegInf;
    walk(a, 0, &mut vec![false; a.rows()], &TropScalar::one(), &mut acc);
    acc
}

/// Laplace expansion along the first row, recursively.
fn det_laplace(a: &TropMatrix) -> TropScalar {
    if a.rows() == 1 {
        return a.at(0, 0).clone();
    }
    expand_row0(a, 0)
}

fn expand_row0(a: &TropMatrix, r: usize) -> TropScalar {
    (0..a.cols())
        .filter(|&c| !a.at(r, c).is_neg_inf())
        .map(|c| a.at(r, c).otimes(&det_laplace(&a.minor0(r, c))))
        .sum()
}

/// `⊕_j a_{i,j} |A_{i,j}|` for row `i` (1-based).
pub fn det_expand(a: &TropMatrix, i: usize) -> Result<TropScalar> {
    let n = a.require_square()?;
    check_index(i, n)?;
    if n < 2 {
        return Err(TropError::SizeGuard {
            op: "row expansion",
            size: n,
            limit: 2,
        });
    }
    guard("expansion determinant", n, BRUTE_LIMIT)?;
    Ok(expand_row0(a, i - 1))
}

/// Optimal assignment on `π(A)`, then a tag decision: ghost when the optimum
/// uses a ghost entry or a second optimal permutation exists.
fn det_fast(a: &TropMatrix) -> TropScalar {
    let n = a.rows();
    let problem = AssignmentProblem::new(a);
    let Some(best) = problem.solve_unrestricted() else {
        return TropScalar::NegInf;
    };
    let magnitude: Rational = best
        .sigma
        .iter()
        .enumerate()
        .map(|(r, &c)| a.at(r, c).magnitude().expect("optimal cells are finite").clone())
        .sum();
    let uses_ghost = best.sigma.iter().enumerate().any(|(r, &c)| a.at(r, c).is_ghost());
    let tied = uses_ghost
        || (0..n).any(|r| {
            let banned = (r, best.sigma[r]);
            problem
                .solve(|i, j| (i, j) != banned)
                .is_some_and(|alt| alt.weight == best.weight)
        });
    if tied {
        TropScalar::Ghost(magnitude)
    } else {
        TropScalar::Real(magnitude)
    }
}

/// A permutation attaining the ν-value of `|A|`, with its product weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AchievingPermutation {
    sigma: Vec<usize>,
    weight: TropScalar,
}

impl AchievingPermutation {
    /// 1-based images: `sigma()[i - 1] = σ(i)`.
    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn image(&self, i: usize) -> usize {
        self.sigma[i - 1]
    }

    pub fn weight(&self) -> &TropScalar {
        &self.weight
    }

    /// Whether the permutation passes through a ghost (or `-inf`) entry of `a`.
    pub fn traverses_ghost(&self, a: &TropMatrix) -> bool {
        self.sigma
            .iter()
            .enumerate()
            .any(|(r, &c)| a.at(r, c - 1).is_ghost())
    }
}

impl fmt::Display for AchievingPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let images: Vec<String> = self.sigma.iter().map(usize::to_string).collect();
        write!(f, "[{}] weight {}", images.join(" "), self.weight)
    }
}

/// Every permutation whose product has the ν-value of `|A|`, in
/// lexicographic order. Empty when `|A| = -inf`.
pub fn achieving_permutations(a: &TropMatrix) -> Result<Vec<AchievingPermutation>> {
    let n = a.require_square()?;
    guard("permutation enumeration", n, BRUTE_LIMIT)?;
    let mut found: Vec<AchievingPermutation> = Vec::new();
    let mut best: Option<Rational> = None;

    fn walk(
        a: &TropMatrix,
        row: usize,
        used: &mut [bool],
        stack: &mut Vec<usize>,
        partial: &TropScalar,
        best: &mut Option<Rational>,
        found: &mut Vec<AchievingPermutation>,
    ) {
        let n = a.rows();
        if row == n {
            let m = partial.magnitude().expect("finite").clone();
            match best.as_ref().map(|b| m.cmp(b)) {
                Some(std::cmp::Ordering::Less) => return,
                Some(std::cmp::Ordering::Greater) | None => {
                    found.clear();
                    *best = Some(m);
                }
                Some(std::cmp::Ordering::Equal) => {}
            }
            found.push(AchievingPermutation {
                sigma: stack.iter().map(|c| c + 1).collect(),
                weight: partial.clone(),
            });
            return;
        }
        for c in 0..n {
            if used[c] || a.at(row, c).is_neg_inf() {
                continue;
            }
            used[c] = true;
            stack.push(c);
            walk(a, row + 1, used, stack, &partial.otimes(a.at(row, c)), best, found);
            stack.pop();
            used[c] = false;
        }
    }

    walk(
        a,
        0,
        &mut vec![false; n],
        &mut Vec::with_capacity(n),
        &TropScalar::one(),
        &mut best,
        &mut found,
    );
    Ok(found)
}

/// Lexicographically least optimal permutation (0-based images), found by
/// fixing one row at a time and re-solving the restricted assignment.
pub(crate) fn lex_least_achieving(a: &TropMatrix) -> Option<Vec<usize>> {
    let n = a.rows();
    let problem = AssignmentProblem::new(a);
    let best = problem.solve_unrestricted()?;
    let mut fixed: Vec<usize> = Vec::with_capacity(n);
    for r in 0..n {
        let mut chosen = None;
        for c in 0..n {
            if fixed.contains(&c) || a.at(r, c).is_neg_inf() {
                continue;
            }
            let allowed = |i: usize, j: usize| {
                if i < r {
                    j == fixed[i]
                } else if i == r {
                    j == c
                } else {
                    !fixed.contains(&j) && j != c
                }
            };
            if problem
                .solve(allowed)
                .is_some_and(|alt| alt.weight == best.weight)
            {
                chosen = Some(c);
                break;
            }
        }
        fixed.push(chosen?);
    }
    Some(fixed)
}

/// `|A|` lies in the ghost part (which includes `-inf`).
pub fn is_singular(a: &TropMatrix) -> Result<bool> {
    a.require_square()?;
    Ok(det_auto(a).is_ghost())
}

/// `Adj(A)` with entry `(i, j)` equal to `|A_{j,i}|`, so that
/// `(A Adj(A))_{i,i} = |A|` by row expansion.
pub fn adjoint(a: &TropMatrix) -> Result<TropMatrix> {
    let n = a.require_square()?;
    if n < 2 {
        return Err(TropError::SizeGuard {
            op: "adjoint",
            size: n,
            limit: 2,
        });
    }
    let minors: Vec<Vec<TropScalar>> = (0..n)
        .map(|r| (0..n).map(|c| det_auto(&a.minor0(r, c))).collect())
        .collect();
    Ok(TropMatrix::from_fn(n, n, |i, j| minors[j][i].clone()))
}

/// `k` rows that are `-inf` on `n + 1 - k` common columns (1-based indices).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RankDefectCertificate {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl RankDefectCertificate {
    pub fn k(&self) -> usize {
        self.rows.len()
    }

    /// Checks the certificate against `a`: sizes `k` and `n + 1 - k`, indices
    /// in range, and `-inf` on every crossing.
    pub fn verify(&self, a: &TropMatrix) -> bool {
        let n = a.rows();
        let k = self.rows.len();
        a.is_square()
            && (1..=n).contains(&k)
            && self.cols.len() == n + 1 - k
            && self.rows.iter().chain(&self.cols).all(|&x| (1..=n).contains(&x))
            && self
                .rows
                .iter()
                .all(|&i| self.cols.iter().all(|&j| a.at(i - 1, j - 1).is_neg_inf()))
    }
}

impl fmt::Display for RankDefectCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[usize]| xs.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
        write!(f, "rows {} cols {}", join(&self.rows), join(&self.cols))
    }
}

/// A certificate for `|A| = -inf`, or `None` when the determinant is finite.
///
/// A deficient matching on the finite support gives, via the König cover,
/// rows whose finite entries all fall in strictly fewer columns.
pub fn rank_defect_certificate(a: &TropMatrix) -> Result<Option<RankDefectCertificate>> {
    let n = a.require_square()?;
    let (row_match, col_match) = support_matching(a);
    if row_match.iter().all(Option::is_some) {
        return Ok(None);
    }
    let (row_seen, col_seen) = alternating_reach(a, &row_match, &col_match);
    let rows: Vec<usize> = (0..n).filter(|&r| row_seen[r]).map(|r| r + 1).collect();
    let k = rows.len();
    let cols: Vec<usize> = (0..n)
        .filter(|&c| !col_seen[c])
        .map(|c| c + 1)
        .take(n + 1 - k)
        .collect();
    let cert = RankDefectCertificate { rows, cols };
    if !cert.verify(a) {
        return Err(TropError::Validation(format!("matching cover produced bad certificate {cert}")));
    }
    Ok(Some(cert))
}

/// Columns (1-based) on which all the given rows are `-inf`; their number is
/// the rank defect of the row set.
pub fn common_neg_inf_columns(a: &TropMatrix, rows: &[usize]) -> Result<Vec<usize>> {
    for &i in rows {
        check_index(i, a.rows())?;
    }
    Ok((0..a.cols())
        .filter(|&c| rows.iter().all(|&i| a.at(i - 1, c).is_neg_inf()))
        .map(|c| c + 1)
        .collect())
}
