//! Sublattices of an ambient lattice, given by integer coordinate rows.



use crate::error::LatticeError;
use crate::lattice::Lattice;
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::snf::smith;

/// A full-row-rank system of coordinate rows spanning a sublattice of
/// `ambient`. Row `i` holds the ambient coordinates of the `i`-th basis
/// vector of the sublattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding<T> {
    ambient: Lattice<T>,
    basis_rows: Matrix<T>,
    induced_gram: Matrix<T>,
}

impl<T: Scalar> Embedding<T> {
    pub fn new(ambient: Lattice<T>, basis_rows: Matrix<T>) -> Result<Self, LatticeError> {
        if basis_rows.ncols() != ambient.rank() {
            return Err(LatticeError::AmbientMismatch {
                ambient: ambient.rank(),
                width: basis_rows.ncols(),
            });
        }
        if smith(&basis_rows).rank() != basis_rows.nrows() {
            return Err(LatticeError::DependentRows);
        }
        let induced_gram = basis_rows.mul(ambient.gram()).mul(&basis_rows.transpose());
        Ok(Embedding { ambient, basis_rows, induced_gram })
    }

    pub fn from_i64_rows(ambient: Lattice<T>, rows: &[&[i64]]) -> Result<Self, LatticeError> {
        Self::new(ambient, Matrix::from_i64(rows))
    }

    pub fn ambient(&self) -> &Lattice<T> {
        &self.ambient
    }

    pub fn basis_rows(&self) -> &Matrix<T> {
        &self.basis_rows
    }

    pub fn rank(&self) -> usize {
        self.basis_rows.nrows()
    }

    /// `B · G · Bᵀ`, possibly degenerate.
    pub fn induced_gram(&self) -> &Matrix<T> {
        &self.induced_gram
    }

    /// The sublattice as an abstract lattice; errors when the induced form
    /// is degenerate.
    pub fn sublattice(&self) -> Result<Lattice<T>, LatticeError> {
        Lattice::from_gram(self.induced_gram.clone()).map_err(|e| match e {
            LatticeError::Singular => LatticeError::DegenerateSublattice,
            other => other,
        })
    }

    /// True iff the sublattice is primitive (the quotient is torsion-free):
    /// all Smith invariant factors of the coordinate matrix are 1.
    pub fn is_primitive(&self) -> bool {
        smith(&self.basis_rows).invariant_factors().is_empty()
    }

    /// Index of the sublattice in its saturation (product of the invariant
    /// factors of the coordinate matrix); 1 iff primitive.
    pub fn saturation_index(&self) -> T {
        smith(&self.basis_rows)
            .invariant_factors()
            .into_iter()
            .fold(T::one(), |acc, f| acc * f)
    }

    /// The saturated orthogonal complement `{v : v · b = 0 for all rows b}`.
    ///
    /// Computed as the integer kernel of `v ↦ v · (G Bᵀ)`: with
    /// `P (G Bᵀ) Q` in Smith form of rank r, the kernel is spanned by the
    /// last `n − r` rows of `P`, which is automatically saturated.
    pub fn orthogonal_complement(&self) -> Result<Embedding<T>, LatticeError> {
        // Degenerate induced form means the complement meets the sublattice.
        if Lattice::from_gram(self.induced_gram.clone()).is_err() {
            return Err(LatticeError::DegenerateSublattice);
        }
        let m = self.ambient.gram().mul(&self.basis_rows.transpose());
        let s = smith(&m);
        let r = s.rank();
        let n = self.ambient.rank();
        if r == n {
            return Err(LatticeError::TrivialComplement);
        }
        let rows: Vec<Vec<T>> = (r..n).map(|i| s.p.row_vec(i)).collect();
        Embedding::new(self.ambient.clone(), Matrix::from_rows(rows))
    }

    /// Saturation of the sublattice: the smallest primitive sublattice
    /// containing it. With `P B Q = D` in Smith form, the row span of `B` is
    /// spanned by `d_i · row_i(Q⁻¹)`; dropping the factors saturates it.
    pub fn saturation(&self) -> Result<Embedding<T>, LatticeError> {
        let s = smith(&self.basis_rows);
        let rows: Vec<Vec<T>> = (0..self.rank()).map(|i| s.q_inv.row_vec(i)).collect();
        Embedding::new(self.ambient.clone(), Matrix::from_rows(rows))
    }

    /// Membership of an ambient coordinate row in the span of the basis
    /// rows over ℤ.
    pub fn contains(&self, v: &[T]) -> bool {
        use crate::matrix::{invert_rational, rank_rational, row_times_matrix};
        use num_rational::Ratio;
        // Solve x · B = v over ℚ via a full-rank square subsystem, then
        // check integrality and consistency.
        let b = self.basis_rows.to_rational();
        let k = b.nrows();
        let mut cols: Vec<usize> = Vec::with_capacity(k);
        for j in 0..b.ncols() {
            if cols.len() == k {
                break;
            }
            let mut trial = cols.clone();
            trial.push(j);
            let sub = Matrix::from_fn(k, trial.len(), |i, t| b[(i, trial[t])].clone());
            if rank_rational(&sub) == trial.len() {
                cols = trial;
            }
        }
        debug_assert_eq!(cols.len(), k, "basis rows have full row rank");
        let square = Matrix::from_fn(k, k, |i, t| b[(i, cols[t])].clone());
        let rhs: Vec<Ratio<T>> = cols.iter().map(|&j| Ratio::from_integer(v[j].clone())).collect();
        let inv = invert_rational(&square).expect("full-rank square subsystem");
        let x = row_times_matrix(&rhs, &inv);
        if !x.iter().all(|c| c.is_integer()) {
            return false;
        }
        let xv: Vec<Ratio<T>> = row_times_matrix(&x, &b);
        xv.iter().zip(v).all(|(a, b)| a == &Ratio::from_integer(b.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::standard;
    use num_bigint::BigInt;

    type E = Embedding<BigInt>;

    #[test]
    fn norm_two_vector_in_u_has_minus_two_complement() {
        let u = standard::hyperbolic::<BigInt>();
        let e = E::from_i64_rows(u, &[&[1, 1]]).unwrap();
        let c = e.orthogonal_complement().unwrap();
        assert_eq!(c.rank(), 1);
        assert_eq!(c.induced_gram(), &Matrix::from_i64(&[&[-2]]));
        assert!(c.is_primitive());
    }

    #[test]
    fn primitivity_detects_index() {
        let u = standard::hyperbolic::<BigInt>();
        let doubled = E::from_i64_rows(u.clone(), &[&[2, 0]]).unwrap();
        assert!(!doubled.is_primitive());
        assert_eq!(doubled.saturation_index(), BigInt::from(2));
        let sat = doubled.saturation().unwrap();
        assert!(sat.is_primitive());
        assert!(sat.contains(&[BigInt::from(1), BigInt::from(0)]));
    }

    #[test]
    fn norm_two_pair_in_i22_2() {
        // span(e1+e2, e3+e4) inside diagonal I_{22,2}: primitive, and the
        // complement has rank 22 and signature (20,2). (It is odd: e5 has
        // norm one and is orthogonal to both vectors.)
        let amb = standard::i_rs::<BigInt>(22, 2);
        let mut r1 = vec![0i64; 24];
        r1[0] = 1;
        r1[1] = 1;
        let mut r2 = vec![0i64; 24];
        r2[2] = 1;
        r2[3] = 1;
        let e = E::from_i64_rows(amb, &[&r1, &r2]).unwrap();
        assert!(e.is_primitive());
        let c = e.orthogonal_complement().unwrap();
        assert_eq!(c.rank(), 22);
        let sub = c.sublattice().unwrap();
        assert_eq!(sub.signature(), (20, 2));
        assert!(!sub.is_even());
        assert_eq!(sub.det_abs(), BigInt::from(4));
        assert!(c.is_primitive());
    }

    #[test]
    fn a1_pair_in_mukai_lattice() {
        let m = standard::mukai::<BigInt>();
        let mut r1 = vec![0i64; 24];
        r1[0] = 1;
        r1[1] = 1;
        let mut r2 = vec![0i64; 24];
        r2[2] = 1;
        r2[3] = 1;
        let e = E::from_i64_rows(m, &[&r1, &r2]).unwrap();
        assert_eq!(e.induced_gram(), &Matrix::from_i64(&[&[2, 0], &[0, 2]]));
        let c = e.orthogonal_complement().unwrap();
        let sub = c.sublattice().unwrap();
        assert_eq!(c.rank(), 22);
        assert_eq!(sub.signature(), (2, 20));
        assert!(sub.is_even());
    }

    #[test]
    fn degenerate_sublattice_rejected() {
        let u = standard::hyperbolic::<BigInt>();
        // e is isotropic: the complement overlaps it.
        let e = E::from_i64_rows(u, &[&[1, 0]]).unwrap();
        assert_eq!(e.orthogonal_complement().unwrap_err(), LatticeError::DegenerateSublattice);
    }

    #[test]
    fn dependent_rows_rejected() {
        let u = standard::lambda00::<BigInt>();
        let mut r1 = vec![0i64; 22];
        r1[0] = 1;
        let r2 = r1.iter().map(|x| 2 * x).collect::<Vec<_>>();
        assert_eq!(
            E::from_i64_rows(u, &[&r1, &r2]).unwrap_err(),
            LatticeError::DependentRows
        );
    }
}
