//! Dense matrices over an exact scalar.
//!
//! Row-major storage; vectors throughout the crate are *row* vectors, so a
//! linear map acts on the right: `v ↦ v · M`.


use num_rational::Ratio;
use num_traits::Zero;

use crate::error::LatticeError;
use crate::scalar::{Entry, Scalar};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: std::fmt::Debug> std::fmt::Debug for Matrix<E> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[i * self.cols..(i + 1) * self.cols])?;
        }
        write!(f, "]")
    }
}

impl<E: Entry> Matrix<E> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![E::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = E::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<E>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn diagonal(entries: Vec<E>) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.into_iter().enumerate() {
            m[(i, i)] = e;
        }
        m
    }

    /// Block-diagonal sum of square matrices.
    pub fn block_diagonal(blocks: &[&Matrix<E>]) -> Self {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let mut m = Self::zeros(n, n);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, b.cols, "block must be square");
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m[(off + i, off + j)] = b[(i, j)].clone();
                }
            }
            off += b.rows;
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<E> {
        self.row(i).to_vec()
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &[E]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map<F: Entry>(&self, f: impl Fn(&E) -> F) -> Matrix<F> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn is_symmetric(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                if self[(i, j)] != self[(j, i)] {
                    return false;
                }
            }
        }
        true
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        Self::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = E::zero();
            for k in 0..self.cols {
                acc = acc + self[(i, k)].clone() * other[(k, j)].clone();
            }
            acc
        })
    }

    pub fn neg(&self) -> Self {
        self.map(|e| -e.clone())
    }

    pub fn scale(&self, s: &E) -> Self {
        self.map(|e| e.clone() * s.clone())
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for k in 0..self.cols {
            self.data.swap(a * self.cols + k, b * self.cols + k);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[dst] += c * row[src]`
    pub fn add_row_multiple(&mut self, dst: usize, src: usize, c: &E) {
        assert_ne!(dst, src);
        for k in 0..self.cols {
            let t = self[(dst, k)].clone() + c.clone() * self[(src, k)].clone();
            self[(dst, k)] = t;
        }
    }

    /// `col[dst] += c * col[src]`
    pub fn add_col_multiple(&mut self, dst: usize, src: usize, c: &E) {
        assert_ne!(dst, src);
        for i in 0..self.rows {
            let t = self[(i, dst)].clone() + c.clone() * self[(i, src)].clone();
            self[(i, dst)] = t;
        }
    }

    pub fn negate_row(&mut self, i: usize) {
        for k in 0..self.cols {
            let t = -self[(i, k)].clone();
            self[(i, k)] = t;
        }
    }

    pub fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let t = -self[(i, j)].clone();
            self[(i, j)] = t;
        }
    }
}

impl<E: Entry> std::ops::Index<(usize, usize)> for Matrix<E> {
    type Output = E;
    fn index(&self, (i, j): (usize, usize)) -> &E {
        &self.data[i * self.cols + j]
    }
}

impl<E: Entry> std::ops::IndexMut<(usize, usize)> for Matrix<E> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut E {
        &mut self.data[i * self.cols + j]
    }
}

/// `v · M` for a row vector `v`.
pub fn row_times_matrix<E: Entry>(v: &[E], m: &Matrix<E>) -> Vec<E> {
    assert_eq!(v.len(), m.nrows(), "dimension mismatch in row * matrix");
    (0..m.ncols())
        .map(|j| {
            let mut acc = E::zero();
            for i in 0..v.len() {
                acc = acc + v[i].clone() * m[(i, j)].clone();
            }
            acc
        })
        .collect()
}

/// `u · M · vᵀ` — the bilinear pairing of two row vectors under `M`.
pub fn pairing<E: Entry>(u: &[E], m: &Matrix<E>, v: &[E]) -> E {
    let uv = row_times_matrix(u, m);
    dot(&uv, v)
}

pub fn dot<E: Entry>(u: &[E], v: &[E]) -> E {
    assert_eq!(u.len(), v.len());
    let mut acc = E::zero();
    for i in 0..u.len() {
        acc = acc + u[i].clone() * v[i].clone();
    }
    acc
}

impl<T: Scalar> Matrix<T> {
    /// Convenience constructor from machine-integer literals.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| T::from(x)).collect()).collect())
    }

    pub fn to_rational(&self) -> Matrix<Ratio<T>> {
        self.map(|e| Ratio::from_integer(e.clone()))
    }
}

/// Inverse of a square rational matrix by Gauss–Jordan elimination.
pub fn invert_rational<T: Scalar>(m: &Matrix<Ratio<T>>) -> Result<Matrix<Ratio<T>>, LatticeError> {
    assert!(m.is_square());
    let n = m.nrows();
    let mut a = m.clone();
    let mut inv = Matrix::<Ratio<T>>::identity(n);
    for col in 0..n {
        let pivot = (col..n).find(|&i| !a[(i, col)].is_zero()).ok_or(LatticeError::Singular)?;
        a.swap_rows(col, pivot);
        inv.swap_rows(col, pivot);
        let p = a[(col, col)].clone();
        for k in 0..n {
            a[(col, k)] = a[(col, k)].clone() / p.clone();
            inv[(col, k)] = inv[(col, k)].clone() / p.clone();
        }
        for i in 0..n {
            if i == col || a[(i, col)].is_zero() {
                continue;
            }
            let f = a[(i, col)].clone();
            for k in 0..n {
                let t = a[(i, k)].clone() - f.clone() * a[(col, k)].clone();
                a[(i, k)] = t;
                let t = inv[(i, k)].clone() - f.clone() * inv[(col, k)].clone();
                inv[(i, k)] = t;
            }
        }
    }
    Ok(inv)
}

/// Signed determinant of a square integer matrix by fraction-free (Bareiss)
/// elimination with row pivoting.
pub fn det_bareiss<T: Scalar>(m: &Matrix<T>) -> T {
    assert!(m.is_square());
    let n = m.nrows();
    if n == 0 {
        return T::one();
    }
    let mut w = m.clone();
    let mut sign_flip = false;
    let mut prev = T::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !w[(i, k)].is_zero()) else {
            return T::zero();
        };
        if p != k {
            w.swap_rows(k, p);
            sign_flip = !sign_flip;
        }
        let pivot = w[(k, k)].clone();
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let num = pivot.clone() * w[(i, j)].clone() - w[(i, k)].clone() * w[(k, j)].clone();
                let (quot, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero());
                w[(i, j)] = quot;
            }
        }
        prev = pivot;
    }
    let det = w[(n - 1, n - 1)].clone();
    if sign_flip {
        -det
    } else {
        det
    }
}

/// Rank of a rational matrix by row elimination.
pub fn rank_rational<T: Scalar>(m: &Matrix<Ratio<T>>) -> usize {
    let mut a = m.clone();
    let (rows, cols) = (a.nrows(), a.ncols());
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&i| !a[(i, col)].is_zero()) else {
            continue;
        };
        a.swap_rows(rank, pivot);
        for i in (rank + 1)..rows {
            if a[(i, col)].is_zero() {
                continue;
            }
            let f = a[(i, col)].clone() / a[(rank, col)].clone();
            for k in col..cols {
                let t = a[(i, k)].clone() - f.clone() * a[(rank, k)].clone();
                a[(i, k)] = t;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}
