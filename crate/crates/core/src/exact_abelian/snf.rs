use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::IntegerMatrix;

/// `u * m * v = d` with `u`, `v` unimodular and `d` diagonal, each diagonal
/// entry non-negative and dividing the next.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub u: IntegerMatrix,
    pub d: IntegerMatrix,
    pub v: IntegerMatrix,
    pub u_inv: IntegerMatrix,
    pub v_inv: IntegerMatrix,
}

impl SmithDecomposition {
    /// Diagonal entries `d[i][i]` for `i < min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d.get(i, i).clone())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|x| !x.is_zero()).count()
    }
}

struct Reducer {
    a: IntegerMatrix,
    u: IntegerMatrix,
    u_inv: IntegerMatrix,
    v: IntegerMatrix,
    v_inv: IntegerMatrix,
}

impl Reducer {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u.swap_rows(i, j);
        self.u_inv.swap_cols(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
        self.v_inv.swap_rows(i, j);
    }

    /// row[target] += q * row[source]
    fn row_op(&mut self, target: usize, source: usize, q: &BigInt) {
        self.a.add_row_multiple(target, source, q);
        self.u.add_row_multiple(target, source, q);
        self.u_inv.add_col_multiple(source, target, &-q);
    }

    /// col[target] += q * col[source]
    fn col_op(&mut self, target: usize, source: usize, q: &BigInt) {
        self.a.add_col_multiple(target, source, q);
        self.v.add_col_multiple(target, source, q);
        self.v_inv.add_row_multiple(source, target, &-q);
    }

    fn negate_row(&mut self, r: usize) {
        self.a.negate_row(r);
        self.u.negate_row(r);
        self.u_inv.negate_col(r);
    }

    /// Smallest nonzero |entry| in the block `[k.., k..]`; ties go to the lowest (row, col).
    fn pivot(&self, k: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, BigInt)> = None;
        for i in k..self.a.rows() {
            for j in k..self.a.cols() {
                let x = self.a.get(i, j);
                if x.is_zero() {
                    continue;
                }
                let ax = x.abs();
                if best.as_ref().is_none_or(|(_, _, b)| ax < *b) {
                    best = Some((i, j, ax));
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }
}

/// Smith normal form with the smallest-absolute-value pivot rule.
pub fn smith_normal_form(m: &IntegerMatrix) -> SmithDecomposition {
    let (rows, cols) = (m.rows(), m.cols());
    let mut r = Reducer {
        a: m.clone(),
        u: IntegerMatrix::identity(rows),
        u_inv: IntegerMatrix::identity(rows),
        v: IntegerMatrix::identity(cols),
        v_inv: IntegerMatrix::identity(cols),
    };
    for k in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = r.pivot(k) else {
                return finish(r);
            };
            r.swap_rows(k, pi);
            r.swap_cols(k, pj);
            let p = r.a.get(k, k).clone();
            let mut dirty = false;
            for i in k + 1..rows {
                let q = r.a.get(i, k) / &p;
                r.row_op(i, k, &-q);
                dirty |= !r.a.get(i, k).is_zero();
            }
            for j in k + 1..cols {
                let q = r.a.get(k, j) / &p;
                r.col_op(j, k, &-q);
                dirty |= !r.a.get(k, j).is_zero();
            }
            if dirty {
                continue;
            }
            let offender = (k + 1..rows)
                .flat_map(|i| (k + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !(r.a.get(i, j) % &p).is_zero());
            if let Some((i, _)) = offender {
                r.row_op(k, i, &BigInt::from(1));
                continue;
            }
            if p.is_negative() {
                r.negate_row(k);
            }
            break;
        }
    }
    finish(r)
}

fn finish(r: Reducer) -> SmithDecomposition {
    SmithDecomposition {
        u: r.u,
        d: r.a,
        v: r.v,
        u_inv: r.u_inv,
        v_inv: r.v_inv,
    }
}
