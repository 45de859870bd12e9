//! Homogeneous tropical linear systems and pure-real solutions.

use std::fmt;

use itertools::Itertools;

use crate::determinant::{det_auto, guard};
use crate::error::{Result, TropError};
use crate::rank::{dependence_witness, search_witness, RANK_LIMIT};
use crate::semiring::{MaxPlusScalar, Rational, TropScalar};
use crate::tensor::{TropMatrix, TropVector};

/// The forms `f_i = ⊕_j a_{i,j} λ_j`, one per row of the coefficient matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSystem {
    pub coefficients: TropMatrix,
}

impl LinearSystem {
    pub fn new(coefficients: TropMatrix) -> Self {
        LinearSystem { coefficients }
    }

    pub fn forms(&self) -> usize {
        self.coefficients.rows()
    }

    pub fn unknowns(&self) -> usize {
        self.coefficients.cols()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SolutionKind {
    PureReal,
    Mixed,
    Ghost,
}

impl SolutionKind {
    pub fn of(point: &TropVector) -> Self {
        if point.is_real_vector() {
            SolutionKind::PureReal
        } else if point.is_ghost_vector() {
            SolutionKind::Ghost
        } else {
            SolutionKind::Mixed
        }
    }
}

impl fmt::Display for SolutionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SolutionKind::PureReal => "pure-real",
            SolutionKind::Mixed => "mixed",
            SolutionKind::Ghost => "ghost",
        })
    }
}

/// A point with the value of every form at it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionReport {
    pub point: TropVector,
    pub kind: SolutionKind,
    pub values: Vec<TropScalar>,
    /// Every value lies in the ghost part.
    pub solves: bool,
}

impl fmt::Display for SolutionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "point {}", self.point)?;
        writeln!(f, "kind {}", self.kind)?;
        writeln!(f, "values {}", self.values.iter().join(" "))?;
        write!(f, "solution {}", self.solves)
    }
}

/// `⊕_j a_j x_j`.
pub fn eval_form(row: &TropVector, point: &TropVector) -> Result<TropScalar> {
    if row.len() != point.len() {
        return Err(TropError::LengthMismatch {
            expected: row.len(),
            found: point.len(),
        });
    }
    Ok(row
        .entries()
        .iter()
        .zip(point.entries())
        .map(|(a, x)| a.otimes(x))
        .sum())
}

pub fn is_solution(s: &LinearSystem, point: &TropVector) -> Result<SolutionReport> {
    let values = s
        .coefficients
        .row_vectors()
        .iter()
        .map(|row| eval_form(row, point))
        .collect::<Result<Vec<_>>>()?;
    Ok(SolutionReport {
        point: point.clone(),
        kind: SolutionKind::of(point),
        solves: values.iter().all(TropScalar::is_ghost),
        values,
    })
}

/// Result of looking for a pure-real solution of a square system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PureRealOutcome {
    /// The coefficient matrix is nonsingular, so no pure-real solution exists.
    Nonsingular,
    Found(SolutionReport),
    /// Singular, yet every real point leaves some form real. `fallback` is
    /// the solution built from the column witness before repair.
    Unattainable { fallback: SolutionReport, reason: String },
}

impl PureRealOutcome {
    pub fn solution(&self) -> Option<&SolutionReport> {
        match self {
            PureRealOutcome::Found(report) => Some(report),
            _ => None,
        }
    }
}

fn to_point(beta: &[MaxPlusScalar]) -> TropVector {
    TropVector::new(beta.iter().map(TropScalar::from_max_plus).collect()).expect("nonempty")
}

/// Replaces `-inf` coordinates of `beta` with a real value small enough that
/// the repaired terms stay strictly below every finite form value.
fn repair(a: &TropMatrix, beta: &[MaxPlusScalar]) -> Vec<MaxPlusScalar> {
    let magnitudes: Vec<&Rational> = a.entries().filter_map(TropScalar::magnitude).collect();
    let (Some(&lo), Some(&hi)) = (magnitudes.iter().min(), magnitudes.iter().max()) else {
        return beta.iter().map(|_| MaxPlusScalar::finite(0)).collect();
    };
    let beta_lo = beta.iter().filter_map(MaxPlusScalar::value).min().expect("witness has a real coefficient");
    let fill = lo + beta_lo - hi - Rational::from_integer(1.into());
    beta.iter()
        .map(|b| match b {
            MaxPlusScalar::NegInf => MaxPlusScalar::Finite(fill.clone()),
            finite => finite.clone(),
        })
        .collect()
}

/// Searches for a solution with every coordinate real.
///
/// A column dependence of the coefficient matrix is a solution; its `-inf`
/// coordinates are lifted to a small real value and the result re-checked.
/// When the lift fails an exact search over full-support column
/// dependences decides the question.
pub fn find_pure_real_solution(s: &LinearSystem) -> Result<PureRealOutcome> {
    let a = &s.coefficients;
    let n = a.require_square()?;
    guard("pure-real solution", n, RANK_LIMIT)?;
    if det_auto(a).is_real() {
        return Ok(PureRealOutcome::Nonsingular);
    }
    let columns = a.transpose();
    let beta = dependence_witness(&columns.row_vectors())?.coefficients;
    let lifted = is_solution(s, &to_point(&repair(a, &beta)))?;
    if lifted.solves && lifted.kind == SolutionKind::PureReal {
        return Ok(PureRealOutcome::Found(lifted));
    }
    if let Some(full) = search_witness(&columns, true) {
        let report = is_solution(s, &to_point(&full))?;
        if report.solves && report.kind == SolutionKind::PureReal {
            return Ok(PureRealOutcome::Found(report));
        }
        return Err(TropError::Validation("full-support column witness does not solve".into()));
    }
    let isolated: Vec<usize> = (0..n)
        .filter(|&r| {
            let finite: Vec<&TropScalar> = a.row_slice(r).iter().filter(|x| !x.is_neg_inf()).collect();
            finite.len() == 1 && finite[0].is_real()
        })
        .map(|r| r + 1)
        .collect();
    let reason = if isolated.is_empty() {
        "no real point makes every form ghost".to_string()
    } else {
        format!(
            "form(s) {} have a single real term and stay real at every real point",
            isolated.iter().join(" ")
        )
    };
    Ok(PureRealOutcome::Unattainable {
        fallback: is_solution(s, &to_point(&beta))?,
        reason,
    })
}
