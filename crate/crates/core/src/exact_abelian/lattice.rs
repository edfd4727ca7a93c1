//! Sublattices of `Z^n` given by spanning columns.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::{smith_normal_form, AbelianError, IntegerMatrix};

/// Basis (as columns) of the integer kernel of `a`.
pub fn kernel_basis(a: &IntegerMatrix) -> IntegerMatrix {
    let snf = smith_normal_form(a);
    let rank = snf.rank();
    let idx: Vec<usize> = (rank..a.cols()).collect();
    snf.v.select_columns(&idx)
}

/// Basis (as columns) of the column span of `a`.
pub fn image_basis(a: &IntegerMatrix) -> IntegerMatrix {
    let snf = smith_normal_form(a);
    let diag = snf.diagonal();
    let cols: Vec<Vec<BigInt>> = (0..snf.rank())
        .map(|i| {
            snf.u_inv
                .column(i)
                .into_iter()
                .map(|x| x * &diag[i])
                .collect()
        })
        .collect();
    IntegerMatrix::from_columns(a.rows(), &cols)
}

/// Some integer `x` with `a x = b`, if one exists.
pub fn solve(a: &IntegerMatrix, b: &[BigInt]) -> Result<Option<Vec<BigInt>>, AbelianError> {
    if b.len() != a.rows() {
        return Err(AbelianError::DimensionMismatch(format!(
            "right-hand side of length {} for {} rows",
            b.len(),
            a.rows()
        )));
    }
    let snf = smith_normal_form(a);
    let c = snf.u.mul_vec(b)?;
    let diag = snf.diagonal();
    let rank = snf.rank();
    let mut z = vec![BigInt::zero(); a.cols()];
    for (i, ci) in c.iter().enumerate() {
        if i < rank {
            let (q, r) = ci.div_rem(&diag[i]);
            if !r.is_zero() {
                return Ok(None);
            }
            z[i] = q;
        } else if !ci.is_zero() {
            return Ok(None);
        }
    }
    Ok(Some(snf.v.mul_vec(&z)?))
}

pub fn in_span(a: &IntegerMatrix, b: &[BigInt]) -> Result<bool, AbelianError> {
    Ok(solve(a, b)?.is_some())
}

/// Whether every column of `sub` lies in the span of `sup`.
pub fn span_contains(sup: &IntegerMatrix, sub: &IntegerMatrix) -> Result<bool, AbelianError> {
    for col in sub.columns() {
        if !in_span(sup, &col)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn same_span(a: &IntegerMatrix, b: &IntegerMatrix) -> Result<bool, AbelianError> {
    Ok(span_contains(a, b)? && span_contains(b, a)?)
}

/// Solves `a X = b` column by column.
pub fn solve_matrix(
    a: &IntegerMatrix,
    b: &IntegerMatrix,
) -> Result<Option<IntegerMatrix>, AbelianError> {
    let mut cols = Vec::with_capacity(b.cols());
    for col in b.columns() {
        match solve(a, &col)? {
            Some(x) => cols.push(x),
            None => return Ok(None),
        }
    }
    Ok(Some(IntegerMatrix::from_columns(a.cols(), &cols)))
}
