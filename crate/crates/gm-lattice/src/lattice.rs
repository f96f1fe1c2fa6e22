//! Integral lattices presented by their Gram matrices.
//!
//! Signature and determinant come from fraction-free symmetric Gaussian
//! elimination (Bareiss), reading Sylvester's law off the sequence of leading
//! principal minors. No floating point anywhere.



use crate::error::LatticeError;
use crate::matrix::Matrix;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice<T> {
    gram: Matrix<T>,
    rank: usize,
    even: bool,
    signature: (usize, usize),
    det: T,
}

/// Signature and determinant of a nondegenerate symmetric integer matrix.
///
/// Bareiss elimination with symmetric pivoting: the working trailing block
/// always equals (leading minor) x (Schur complement) of a congruence
/// transform of the input, so its entries stay integral and the pivots are
/// the leading principal minors. Count of sign changes in that sequence is
/// the negative index (Jacobi). When the whole trailing diagonal vanishes, a
/// congruence `row_i += row_j`, `col_i += col_j` manufactures the pivot
/// `2·a_ij` and we retry.
pub fn symmetric_signature_det<T: Scalar>(g: &Matrix<T>) -> Result<(usize, usize, T), LatticeError> {
    debug_assert!(g.is_square() && g.is_symmetric());
    let n = g.nrows();
    let mut w = g.clone();
    let mut prev_pivot = T::one();
    let mut prev_sign = 1i8;
    let mut pos = 0usize;
    let mut neg = 0usize;
    let mut det = T::one();
    let mut k = 0;
    while k < n {
        if w[(k, k)].is_zero() {
            if let Some(j) = ((k + 1)..n).find(|&j| !w[(j, j)].is_zero()) {
                w.swap_rows(k, j);
                w.swap_cols(k, j);
            } else {
                // All trailing diagonal entries vanish; find any nonzero
                // off-diagonal entry and fold it onto the diagonal.
                let mut found = None;
                'scan: for i in k..n {
                    for j in (i + 1)..n {
                        if !w[(i, j)].is_zero() {
                            found = Some((i, j));
                            break 'scan;
                        }
                    }
                }
                let Some((i, j)) = found else {
                    return Err(LatticeError::Singular);
                };
                w.add_row_multiple(i, j, &T::one());
                w.add_col_multiple(i, j, &T::one());
                w.swap_rows(k, i);
                w.swap_cols(k, i);
            }
        }
        let pivot = w[(k, k)].clone();
        let sign = if pivot.is_positive() { 1i8 } else { -1i8 };
        if sign == prev_sign {
            pos += 1;
        } else {
            neg += 1;
        }
        prev_sign = sign;
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let num = pivot.clone() * w[(i, j)].clone() - w[(i, k)].clone() * w[(k, j)].clone();
                let (quot, rem) = num.div_rem(&prev_pivot);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                w[(i, j)] = quot;
            }
        }
        det = pivot.clone();
        prev_pivot = pivot;
        k += 1;
    }
    Ok((pos, neg, det))
}

impl<T: Scalar> Lattice<T> {
    /// Build a lattice from a symmetric nondegenerate integer Gram matrix.
    pub fn from_gram(gram: Matrix<T>) -> Result<Self, LatticeError> {
        if !gram.is_square() {
            return Err(LatticeError::NotSquare { rows: gram.nrows(), cols: gram.ncols() });
        }
        if gram.nrows() == 0 {
            return Err(LatticeError::EmptyGram);
        }
        for i in 0..gram.nrows() {
            for j in (i + 1)..gram.ncols() {
                if gram[(i, j)] != gram[(j, i)] {
                    return Err(LatticeError::NotSymmetric { i, j });
                }
            }
        }
        let (pos, neg, det) = symmetric_signature_det(&gram)?;
        if det.is_zero() {
            return Err(LatticeError::Singular);
        }
        let rank = gram.nrows();
        let even = (0..rank).all(|i| gram[(i, i)].is_even());
        Ok(Lattice { gram, rank, even, signature: (pos, neg), det })
    }

    pub fn from_i64_gram(rows: &[&[i64]]) -> Result<Self, LatticeError> {
        Self::from_gram(Matrix::from_i64(rows))
    }

    pub fn gram(&self) -> &Matrix<T> {
        &self.gram
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_even(&self) -> bool {
        self.even
    }

    /// (positive, negative) inertia indices.
    pub fn signature(&self) -> (usize, usize) {
        self.signature
    }

    pub fn det(&self) -> &T {
        &self.det
    }

    pub fn det_abs(&self) -> T {
        self.det.abs()
    }

    pub fn is_unimodular(&self) -> bool {
        self.det.abs().is_one()
    }

    pub fn is_positive_definite(&self) -> bool {
        self.signature == (self.rank, 0)
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let gram = Matrix::block_diagonal(&[&self.gram, &other.gram]);
        Lattice::from_gram(gram).expect("direct sum of valid lattices is valid")
    }

    /// Direct sum of several lattices, left to right.
    pub fn direct_sum_all(blocks: &[&Self]) -> Self {
        assert!(!blocks.is_empty());
        let grams: Vec<&Matrix<T>> = blocks.iter().map(|l| l.gram()).collect();
        Lattice::from_gram(Matrix::block_diagonal(&grams)).expect("direct sum of valid lattices is valid")
    }

    /// `L(m)`: the same module with the form multiplied by `m`.
    pub fn rescale(&self, m: &T) -> Result<Self, LatticeError> {
        if m.is_zero() {
            return Err(LatticeError::ZeroScale);
        }
        Lattice::from_gram(self.gram.scale(m))
    }

    /// Bilinear pairing of two coordinate rows.
    pub fn pair(&self, u: &[T], v: &[T]) -> T {
        crate::matrix::pairing(u, &self.gram, v)
    }

    /// Norm `v·v` of a coordinate row.
    pub fn norm(&self, v: &[T]) -> T {
        self.pair(v, v)
    }
}
