//! Pseudo units and the canonical pseudo inverse `Adj(A) / |A|`.

use crate::determinant::{adjoint, det_auto};
use crate::error::{Result, TropError};
use crate::semiring::TropScalar;
use crate::tensor::TropMatrix;

/// Evidence for membership in the set of pseudo units.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoUnitReport {
    pub subject: TropMatrix,
    /// Every diagonal entry is the real `0`.
    pub diagonal_ok: bool,
    /// Every off-diagonal entry is a ghost or `-inf`.
    pub offdiag_ghost_ok: bool,
    pub nonsingular_ok: bool,
    pub verdict: bool,
}

pub fn is_pseudo_unit(e: &TropMatrix) -> Result<PseudoUnitReport> {
    let n = e.require_square()?;
    let zero = TropScalar::real(0);
    let diagonal_ok = (0..n).all(|i| *e.at(i, i) == zero);
    let offdiag_ghost_ok = (0..n)
        .flat_map(|r| (0..n).map(move |c| (r, c)))
        .all(|(r, c)| r == c || e.at(r, c).is_ghost());
    let nonsingular_ok = det_auto(e).is_real();
    Ok(PseudoUnitReport {
        subject: e.clone(),
        diagonal_ok,
        offdiag_ghost_ok,
        nonsingular_ok,
        verdict: diagonal_ok && offdiag_ghost_ok && nonsingular_ok,
    })
}

/// `A^∇`; singular matrices have none.
pub fn pseudo_inverse(a: &TropMatrix) -> Result<TropMatrix> {
    let n = a.require_square()?;
    let d = det_auto(a);
    if d.is_ghost() {
        return Err(TropError::Singular);
    }
    if n == 1 {
        return Ok(TropMatrix::from_fn(1, 1, |_, _| {
            TropScalar::one().checked_div(&d).expect("real determinant")
        }));
    }
    let adj = adjoint(a)?;
    Ok(adj.map(|x| x.checked_div(&d).expect("real determinant")))
}

/// Both `A B` and `B A` are pseudo units.
pub fn verify_pseudo_inverse(a: &TropMatrix, b: &TropMatrix) -> Result<bool> {
    let left = a.mat_mul(b)?;
    let right = b.mat_mul(a)?;
    if !left.is_square() || !right.is_square() || left.rows() != right.rows() {
        return Err(TropError::ShapeMismatch {
            left_rows: a.rows(),
            left_cols: a.cols(),
            right_rows: b.rows(),
            right_cols: b.cols(),
        });
    }
    Ok(is_pseudo_unit(&left)?.verdict && is_pseudo_unit(&right)?.verdict)
}
