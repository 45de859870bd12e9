//! Reference implementations used to check the library from outside.
//!
//! These share no code with the crate beyond the scalar type: permanents are
//! enumerated directly and ghost-ness is decided by counting maximizers.

#![allow(dead_code)]

use itertools::Itertools;
use num_rational::BigRational;
use num_traits::Zero;
use supertrop::{MaxPlusScalar, TropMatrix, TropScalar};

pub fn entry(a: &TropMatrix, r: usize, c: usize) -> &TropScalar {
    a.entry(r + 1, c + 1).unwrap()
}

fn magnitude(x: &TropScalar) -> Option<&BigRational> {
    match x {
        TropScalar::NegInf => None,
        TropScalar::Real(v) | TropScalar::Ghost(v) => Some(v),
    }
}

/// The determinant by enumeration: the top magnitude over all permutations,
/// real only when one permutation attains it and uses real entries only.
pub fn oracle_det(a: &TropMatrix) -> TropScalar {
    let n = a.rows();
    let mut best: Option<BigRational> = None;
    let mut attained = 0usize;
    let mut best_real = false;
    for sigma in (0..n).permutations(n) {
        let mut total = BigRational::zero();
        let mut real = true;
        let mut finite = true;
        for (r, &c) in sigma.iter().enumerate() {
            let x = entry(a, r, c);
            match magnitude(x) {
                Some(v) => total += v,
                None => {
                    finite = false;
                    break;
                }
            }
            real &= matches!(x, TropScalar::Real(_));
        }
        if !finite {
            continue;
        }
        if best.as_ref().is_none_or(|b| total > *b) {
            best = Some(total);
            attained = 1;
            best_real = real;
        } else if best.as_ref() == Some(&total) {
            attained += 1;
        }
    }
    match best {
        None => TropScalar::NegInf,
        Some(v) if attained == 1 && best_real => TropScalar::Real(v),
        Some(v) => TropScalar::Ghost(v),
    }
}

pub fn is_ghost_part(x: &TropScalar) -> bool {
    !matches!(x, TropScalar::Real(_))
}

/// Each column of `⊕_i α_i ⊙ row_i` lies in the ghost part, computed by
/// tracking the top magnitude and whether it is attained by a single real term.
pub fn oracle_combination_is_ghost(a: &TropMatrix, alpha: &[MaxPlusScalar]) -> bool {
    if alpha.len() != a.rows() || alpha.iter().all(|x| matches!(x, MaxPlusScalar::NegInf)) {
        return false;
    }
    (0..a.cols()).all(|c| {
        let mut best: Option<BigRational> = None;
        let mut single_real = false;
        for (r, coefficient) in alpha.iter().enumerate() {
            let (MaxPlusScalar::Finite(k), Some(v)) = (coefficient, magnitude(entry(a, r, c))) else {
                continue;
            };
            let term = k + v;
            let real = matches!(entry(a, r, c), TropScalar::Real(_));
            if best.as_ref().is_none_or(|b| term > *b) {
                best = Some(term);
                single_real = real;
            } else if best.as_ref() == Some(&term) {
                single_real = false;
            }
        }
        !single_real
    })
}

/// Membership in the pseudo units, checked entry by entry.
pub fn oracle_pseudo_unit(e: &TropMatrix) -> bool {
    let n = e.rows();
    let diagonal = (0..n).all(|i| *entry(e, i, i) == TropScalar::real(0));
    let off = (0..n).all(|r| (0..n).all(|c| r == c || is_ghost_part(entry(e, r, c))));
    diagonal && off && matches!(oracle_det(e), TropScalar::Real(_))
}

/// Integer view of a matrix over `R ∪ {-inf}`, for grid searches.
pub fn integer_entries(a: &TropMatrix) -> Vec<Vec<Option<i64>>> {
    (0..a.rows())
        .map(|r| {
            (0..a.cols())
                .map(|c| {
                    magnitude(entry(a, r, c)).map(|v| {
                        assert!(v.is_integer());
                        i64::try_from(v.to_integer()).unwrap()
                    })
                })
                .collect()
        })
        .collect()
}

/// Whether the real point `x` makes every form of a real system ghost.
pub fn grid_point_solves(a: &[Vec<Option<i64>>], x: &[i64]) -> bool {
    a.iter().all(|row| {
        let mut best: Option<i64> = None;
        let mut count = 0;
        for (w, &xj) in row.iter().zip(x) {
            let Some(w) = w else { continue };
            let t = w + xj;
            match best {
                Some(b) if t < b => {}
                Some(b) if t == b => count += 1,
                _ => {
                    best = Some(t);
                    count = 1;
                }
            }
        }
        best.is_none() || count >= 2
    })
}

/// Searches real points with `x_1 = 0` and the other coordinates drawn from
/// the differences of finite entry magnitudes.
pub fn grid_finds_pure_real_solution(a: &TropMatrix) -> bool {
    let w = integer_entries(a);
    let finite: Vec<i64> = w.iter().flatten().flatten().copied().collect();
    let diffs: Vec<i64> = finite
        .iter()
        .cartesian_product(&finite)
        .map(|(p, q)| p - q)
        .sorted()
        .dedup()
        .collect();
    let n = a.cols();
    if n == 1 {
        return grid_point_solves(&w, &[0]);
    }
    std::iter::repeat_n(diffs.iter().copied(), n - 1)
        .multi_cartesian_product()
        .any(|tail| {
            let mut x = vec![0];
            x.extend(tail);
            grid_point_solves(&w, &x)
        })
}
