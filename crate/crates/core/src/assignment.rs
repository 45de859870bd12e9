//! Exact combinatorial solvers behind the fast determinant path: a dense
//! Hungarian method over scaled integer weights, and cardinality matching
//! with a König cover for the `-inf` certificate.

use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::semiring::{abs_max, common_denominator};
use crate::tensor::TropMatrix;

pub(crate) trait Cost:
    Clone + Ord + Zero + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self>
{
    fn from_usize(n: usize) -> Self;
    fn into_big(self) -> BigInt;
}

impl Cost for i128 {
    fn from_usize(n: usize) -> Self {
        n as i128
    }
    fn into_big(self) -> BigInt {
        BigInt::from(self)
    }
}

impl Cost for BigInt {
    fn from_usize(n: usize) -> Self {
        BigInt::from(n)
    }
    fn into_big(self) -> BigInt {
        self
    }
}

/// Minimum-cost perfect assignment on a square cost matrix; returns the
/// column assigned to each row.
fn hungarian<C: Cost>(cost: &[Vec<C>]) -> Vec<usize> {
    let n = cost.len();
    let mut u = vec![C::zero(); n + 1];
    let mut v = vec![C::zero(); n + 1];
    let mut p = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];

    for i in 1..=n {
        p[0] = i;
        let mut j0 = 0usize;
        let mut minv: Vec<Option<C>> = vec![None; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta: Option<C> = None;
            let mut j1 = 0usize;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                let cur = cost[i0 - 1][j - 1].clone() - u[i0].clone() - v[j].clone();
                if minv[j].as_ref().is_none_or(|m| cur < *m) {
                    minv[j] = Some(cur);
                    way[j] = j0;
                }
                if delta.is_none() || minv[j] < delta {
                    delta = minv[j].clone();
                    j1 = j;
                }
            }
            let delta = delta.expect("an unused column remains");
            for j in 0..=n {
                if used[j] {
                    u[p[j]] = u[p[j]].clone() + delta.clone();
                    v[j] = v[j].clone() - delta.clone();
                } else if let Some(m) = minv[j].take() {
                    minv[j] = Some(m - delta.clone());
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }

    let mut assignment = vec![0usize; n];
    for j in 1..=n {
        assignment[p[j] - 1] = j - 1;
    }
    assignment
}

/// An optimal permutation (0-based images) and its total weight scaled by
/// the problem's common denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Assignment {
    pub sigma: Vec<usize>,
    pub weight: BigInt,
}

enum Weights {
    Small(Vec<Vec<Option<i128>>>),
    Big(Vec<Vec<Option<BigInt>>>),
}

/// The max-weight assignment problem on `π(A)`; `-inf` cells are forbidden.
pub(crate) struct AssignmentProblem {
    weights: Weights,
}

const SMALL_MAGNITUDE_BITS: u64 = 60;
const SMALL_SIZE_LIMIT: usize = 1 << 16;

impl AssignmentProblem {
    pub fn new(a: &TropMatrix) -> Self {
        let n = a.rows();
        let denom = common_denominator(a.entries().filter_map(|x| x.magnitude()));
        let scaled: Vec<Vec<Option<BigInt>>> = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| a.at(r, c).magnitude().map(|m| (m * &denom).to_integer()))
                    .collect()
            })
            .collect();
        let largest = abs_max(scaled.iter().flatten().flatten());
        let fits = largest.bits() <= SMALL_MAGNITUDE_BITS && n <= SMALL_SIZE_LIMIT;
        let weights = if fits {
            Weights::Small(
                scaled
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|w| w.as_ref().map(|w| w.to_i128().expect("fits")))
                            .collect()
                    })
                    .collect(),
            )
        } else {
            Weights::Big(scaled)
        };
        AssignmentProblem { weights }
    }

    /// Best assignment using only cells where `allowed(r, c)` holds and the
    /// entry is finite; `None` when no such permutation exists.
    pub fn solve(&self, allowed: impl Fn(usize, usize) -> bool) -> Option<Assignment> {
        match &self.weights {
            Weights::Small(w) => solve_with(w, allowed),
            Weights::Big(w) => solve_with(w, allowed),
        }
    }

    pub fn solve_unrestricted(&self) -> Option<Assignment> {
        self.solve(|_, _| true)
    }
}

fn solve_with<C: Cost>(w: &[Vec<Option<C>>], allowed: impl Fn(usize, usize) -> bool) -> Option<Assignment> {
    let n = w.len();
    let usable = |r: usize, c: usize| -> Option<&C> {
        if allowed(r, c) {
            w[r][c].as_ref()
        } else {
            None
        }
    };
    let mut hi: Option<C> = None;
    let mut lo: Option<C> = None;
    for r in 0..n {
        for c in 0..n {
            if let Some(x) = usable(r, c) {
                if hi.as_ref().is_none_or(|h| x > h) {
                    hi = Some(x.clone());
                }
                if lo.as_ref().is_none_or(|l| x < l) {
                    lo = Some(x.clone());
                }
            }
        }
    }
    let (hi, lo) = (hi?, lo?);
    // Any assignment touching a forbidden cell costs more than every admissible one.
    let forbidden = C::from_usize(n) * (hi.clone() - lo) + C::from_usize(1);
    let cost: Vec<Vec<C>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| match usable(r, c) {
                    Some(x) => hi.clone() - x.clone(),
                    None => forbidden.clone(),
                })
                .collect()
        })
        .collect();
    let sigma = hungarian(&cost);
    let mut weight = C::zero();
    for (r, &c) in sigma.iter().enumerate() {
        weight = weight + usable(r, c)?.clone();
    }
    Some(Assignment {
        sigma,
        weight: weight.into_big(),
    })
}

/// Maximum cardinality matching on the finite support of a square matrix.
/// Returns `row -> column` and `column -> row` maps (0-based).
pub(crate) fn support_matching(a: &TropMatrix) -> (Vec<Option<usize>>, Vec<Option<usize>>) {
    let (m, n) = a.shape();
    let mut row_match: Vec<Option<usize>> = vec![None; m];
    let mut col_match: Vec<Option<usize>> = vec![None; n];

    fn augment(
        a: &TropMatrix,
        r: usize,
        seen: &mut [bool],
        row_match: &mut [Option<usize>],
        col_match: &mut [Option<usize>],
    ) -> bool {
        for c in 0..a.cols() {
            if a.at(r, c).is_neg_inf() || seen[c] {
                continue;
            }
            seen[c] = true;
            let free = match col_match[c] {
                None => true,
                Some(r2) => augment(a, r2, seen, row_match, col_match),
            };
            if free {
                row_match[r] = Some(c);
                col_match[c] = Some(r);
                return true;
            }
        }
        false
    }

    for r in 0..m {
        let mut seen = vec![false; n];
        augment(a, r, &mut seen, &mut row_match, &mut col_match);
    }
    (row_match, col_match)
}

/// Rows and columns reachable by alternating paths from unmatched rows.
/// Every finite entry of a reached row lies in a reached column.
pub(crate) fn alternating_reach(
    a: &TropMatrix,
    row_match: &[Option<usize>],
    col_match: &[Option<usize>],
) -> (Vec<bool>, Vec<bool>) {
    let (m, n) = a.shape();
    let mut row_seen = vec![false; m];
    let mut col_seen = vec![false; n];
    let mut stack: Vec<usize> = (0..m).filter(|&r| row_match[r].is_none()).collect();
    for &r in &stack {
        row_seen[r] = true;
    }
    while let Some(r) = stack.pop() {
        for c in 0..n {
            if a.at(r, c).is_neg_inf() || col_seen[c] {
                continue;
            }
            col_seen[c] = true;
            if let Some(r2) = col_match[c] {
                if !row_seen[r2] {
                    row_seen[r2] = true;
                    stack.push(r2);
                }
            }
        }
    }
    (row_seen, col_seen)
}
