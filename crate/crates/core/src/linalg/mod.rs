//! Exact dense linear algebra: matrices over [`Field`](crate::field::Field),
//! permutation matrices, integer polynomials and minimal polynomials.

mod matrix;
mod permutation;
mod polynomial;

pub use matrix::{Echelon, Matrix, RationalMatrix};
pub use permutation::PermutationMatrix;
pub use polynomial::{check_identity_square, check_nilpotent_shift, minimal_polynomial, IntPolynomial};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("matrix is {rows}x{cols}, expected square")]
    NonSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: {left:?} vs {right:?}")]
    DimensionMismatch { left: (usize, usize), right: (usize, usize) },
    #[error("rows have different lengths")]
    Ragged,
    #[error("image is not a permutation")]
    NotAPermutation,
    #[error("Coxeter matrix of a unit-triangular integer Cartan matrix is not integral")]
    NonIntegralCoxeter,
}

/// `C = -M^{-1} M^T`.
///
/// A unit-triangular integer Cartan matrix has an integer inverse, so the
/// result must then be integral; that is asserted.
pub fn coxeter_from_cartan(cartan: &RationalMatrix) -> Result<RationalMatrix, LinalgError> {
    let inv = cartan.inverse()?;
    let c = inv.mul_ok(&cartan.transpose()).neg();
    if cartan.is_integral() && is_unit_triangular(cartan) && !c.is_integral() {
        return Err(LinalgError::NonIntegralCoxeter);
    }
    Ok(c)
}

fn is_unit_triangular(m: &RationalMatrix) -> bool {
    use crate::field::Field;
    let n = m.rows();
    let diag = (0..n).all(|i| m[(i, i)].is_one());
    let upper = (0..n).all(|i| (0..i).all(|j| m[(i, j)].is_zero()));
    let lower = (0..n).all(|i| (i + 1..n).all(|j| m[(i, j)].is_zero()));
    diag && (upper || lower)
}
