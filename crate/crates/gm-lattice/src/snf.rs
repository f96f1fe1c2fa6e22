//! Smith normal form over an exact integer scalar, with transformation
//! matrices.
//!
//! `smith(a)` returns unimodular `p`, `q` (and `q⁻¹`) with `p · a · q = d`
//! diagonal, diagonal entries nonnegative and each dividing the next. The
//! transforms are what the rest of the crate consumes: rows of `p` present
//! discriminant-group generators and integer kernels, `q` converts dual
//! vectors to invariant-factor coordinates, rows of `q⁻¹` lift quotient-group
//! generators.

use crate::matrix::Matrix;
use crate::scalar::Scalar;


#[derive(Debug, Clone)]
pub struct Smith<T> {
    /// Diagonal form, same shape as the input.
    pub d: Matrix<T>,
    /// Row transform (square, unimodular).
    pub p: Matrix<T>,
    /// Column transform (square, unimodular).
    pub q: Matrix<T>,
    /// Inverse of the column transform.
    pub q_inv: Matrix<T>,
}

impl<T: Scalar> Smith<T> {
    /// Diagonal entries > 1 (the nontrivial invariant factors, ascending).
    pub fn invariant_factors(&self) -> Vec<T> {
        self.all_diagonal().into_iter().filter(|x| x > &T::one()).collect()
    }

    /// All `min(rows, cols)` diagonal entries, including ones and zeros.
    pub fn all_diagonal(&self) -> Vec<T> {
        let n = self.d.nrows().min(self.d.ncols());
        (0..n).map(|i| self.d[(i, i)].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.all_diagonal().iter().filter(|x| !x.is_zero()).count()
    }
}

/// Smallest-|entry| pivot in the trailing block, lowest (i, j) on ties.
fn find_pivot<T: Scalar>(a: &Matrix<T>, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in k..a.nrows() {
        for j in k..a.ncols() {
            if a[(i, j)].is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if a[(bi, bj)].abs() <= a[(i, j)].abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

pub fn smith<T: Scalar>(input: &Matrix<T>) -> Smith<T> {
    let (rows, cols) = (input.nrows(), input.ncols());
    let mut a = input.clone();
    let mut p = Matrix::<T>::identity(rows);
    let mut q = Matrix::<T>::identity(cols);
    let mut q_inv = Matrix::<T>::identity(cols);

    // Column op helpers keep q and q_inv in sync: a ← a·E, q ← q·E,
    // q_inv ← E⁻¹·q_inv.
    let n = rows.min(cols);
    let mut k = 0;
    while k < n {
        let Some((pi, pj)) = find_pivot(&a, k) else { break };
        a.swap_rows(k, pi);
        p.swap_rows(k, pi);
        a.swap_cols(k, pj);
        q.swap_cols(k, pj);
        q_inv.swap_rows(k, pj);

        let mut clean = true;
        // Clear the column below the pivot.
        for i in (k + 1)..rows {
            if a[(i, k)].is_zero() {
                continue;
            }
            let f = -a[(i, k)].div_floor(&a[(k, k)]);
            a.add_row_multiple(i, k, &f);
            p.add_row_multiple(i, k, &f);
            if !a[(i, k)].is_zero() {
                clean = false;
            }
        }
        // Clear the row right of the pivot.
        for j in (k + 1)..cols {
            if a[(k, j)].is_zero() {
                continue;
            }
            let f = -a[(k, j)].div_floor(&a[(k, k)]);
            a.add_col_multiple(j, k, &f);
            q.add_col_multiple(j, k, &f);
            q_inv.add_row_multiple(k, j, &-f);
            if !a[(k, j)].is_zero() {
                clean = false;
            }
        }
        if !clean {
            // Remainders left; the pivot shrank strictly, retry this k.
            continue;
        }
        // Divisibility: the pivot must divide the whole trailing block.
        let mut fixed = false;
        'scan: for i in (k + 1)..rows {
            for j in (k + 1)..cols {
                if !a[(i, j)].mod_floor(&a[(k, k)]).is_zero() {
                    a.add_row_multiple(k, i, &T::one());
                    p.add_row_multiple(k, i, &T::one());
                    fixed = true;
                    break 'scan;
                }
            }
        }
        if fixed {
            continue;
        }
        if a[(k, k)].is_negative() {
            a.negate_row(k);
            p.negate_row(k);
        }
        k += 1;
    }
    Smith { d: a, p, q, q_inv }
}
