//! Isometries of a lattice, their enumeration on small definite lattices,
//! and their induced action on discriminant groups.
//!
//! Vectors are rows, so an isometry acts as `v ↦ v · M` and preservation of
//! the form reads `M · G · Mᵀ = G`.

use std::collections::BTreeMap;



use crate::error::LatticeError;
use crate::form::{FiniteQuadraticForm, FormMap};
use crate::lattice::Lattice;
use crate::matrix::{det_bareiss, invert_rational, row_times_matrix, Matrix};
use crate::scalar::Scalar;
use crate::svec::vectors_of_norm;

/// Enumeration is only offered up to this rank; beyond it the brute-force
/// bound is refused rather than silently attempted.
pub const MAX_ENUMERATION_RANK: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isometry<T> {
    lattice: Lattice<T>,
    matrix: Matrix<T>,
}

impl<T: Scalar> Isometry<T> {
    pub fn new(lattice: Lattice<T>, matrix: Matrix<T>) -> Result<Self, LatticeError> {
        if !matrix.is_square() || matrix.nrows() != lattice.rank() {
            return Err(LatticeError::LatticeMismatch);
        }
        let g = lattice.gram();
        if &matrix.mul(g).mul(&matrix.transpose()) != g {
            return Err(LatticeError::NotIsometry);
        }
        debug_assert!(det_bareiss(&matrix).abs().is_one());
        Ok(Isometry { lattice, matrix })
    }

    pub fn from_i64(lattice: Lattice<T>, rows: &[&[i64]]) -> Result<Self, LatticeError> {
        Self::new(lattice, Matrix::from_i64(rows))
    }

    pub fn identity(lattice: Lattice<T>) -> Self {
        let m = Matrix::identity(lattice.rank());
        Isometry { lattice, matrix: m }
    }

    pub fn minus_identity(lattice: Lattice<T>) -> Self {
        let m = Matrix::identity(lattice.rank()).neg();
        Isometry { lattice, matrix: m }
    }

    pub fn lattice(&self) -> &Lattice<T> {
        &self.lattice
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.matrix
    }

    pub fn apply(&self, v: &[T]) -> Vec<T> {
        row_times_matrix(v, &self.matrix)
    }

    pub fn det(&self) -> T {
        det_bareiss(&self.matrix)
    }

    /// `self` followed by `then`.
    pub fn compose(&self, then: &Isometry<T>) -> Result<Isometry<T>, LatticeError> {
        if self.lattice != then.lattice {
            return Err(LatticeError::LatticeMismatch);
        }
        Ok(Isometry { lattice: self.lattice.clone(), matrix: self.matrix.mul(&then.matrix) })
    }

    pub fn inverse(&self) -> Isometry<T> {
        let inv = invert_rational(&self.matrix.to_rational()).expect("isometries are unimodular");
        let m = inv.map(|x| {
            debug_assert!(x.is_integer());
            x.to_integer()
        });
        Isometry { lattice: self.lattice.clone(), matrix: m }
    }

    /// Induced automorphism of the discriminant form.
    pub fn disc_action(&self, f: &FiniteQuadraticForm<T>) -> Result<FormMap<T>, LatticeError> {
        if f.source_gram() != self.lattice.gram() {
            return Err(LatticeError::LatticeMismatch);
        }
        let m_rat = self.matrix.to_rational();
        let images = f
            .generators()
            .iter()
            .map(|g| f.class_coords(&row_times_matrix(g, &m_rat)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FormMap::new(f, f, images))
    }

    /// Sign of the determinant; on a positive definite lattice this is the
    /// orientation behaviour on the positive directions. −1 means reversing.
    pub fn orientation_sign(&self) -> Result<i32, LatticeError> {
        if !self.lattice.is_positive_definite() {
            return Err(LatticeError::NotPositiveDefinite);
        }
        Ok(if self.det().is_positive() { 1 } else { -1 })
    }
}

/// The full finite group of isometries of a positive definite lattice of
/// rank ≤ 4 fixing every vector in `fixed` (coordinate rows).
///
/// Backtracking over rows: the image of the i-th basis vector ranges over
/// the vectors of norm `G_ii`, constrained by the pairings with the rows
/// already placed. Complete matrices satisfy `M G Mᵀ = G` by construction.
pub fn isometries<T: Scalar>(
    lattice: &Lattice<T>,
    fixed: &[Vec<T>],
    cap: usize,
) -> Result<Vec<Isometry<T>>, LatticeError> {
    if !lattice.is_positive_definite() {
        return Err(LatticeError::NotPositiveDefinite);
    }
    let n = lattice.rank();
    if n > MAX_ENUMERATION_RANK {
        return Err(LatticeError::RankTooLarge { rank: n, max: MAX_ENUMERATION_RANK });
    }
    let g = lattice.gram();
    let mut by_norm: BTreeMap<T, Vec<Vec<T>>> = BTreeMap::new();
    for i in 0..n {
        let t = g[(i, i)].clone();
        if let std::collections::btree_map::Entry::Vacant(slot) = by_norm.entry(t.clone()) {
            slot.insert(vectors_of_norm(lattice, &t, cap)?);
        }
    }

    let mut out = Vec::new();
    let mut rows: Vec<Vec<T>> = Vec::with_capacity(n);
    dfs(lattice, fixed, &by_norm, &mut rows, &mut out);
    out.sort_by(|a, b| {
        let ka: Vec<&T> = a.matrix.rows_iter().flatten().collect();
        let kb: Vec<&T> = b.matrix.rows_iter().flatten().collect();
        ka.cmp(&kb)
    });
    return Ok(out);

    fn dfs<T: Scalar>(
        lattice: &Lattice<T>,
        fixed: &[Vec<T>],
        by_norm: &BTreeMap<T, Vec<Vec<T>>>,
        rows: &mut Vec<Vec<T>>,
        out: &mut Vec<Isometry<T>>,
    ) {
        let n = lattice.rank();
        let g = lattice.gram();
        let depth = rows.len();
        if depth == n {
            let m = Matrix::from_rows(rows.clone());
            out.push(Isometry { lattice: lattice.clone(), matrix: m });
            return;
        }
        'cand: for v in &by_norm[&g[(depth, depth)]] {
            for (j, prev) in rows.iter().enumerate() {
                if lattice.pair(v, prev) != g[(depth, j)] {
                    continue 'cand;
                }
            }
            rows.push(v.clone());
            // A fixed vector pins the partial sum as soon as every basis
            // direction it touches has been assigned an image.
            let ok = fixed.iter().all(|lam| {
                if lam.iter().enumerate().any(|(i, c)| !c.is_zero() && i > depth) {
                    return true;
                }
                let mut img = vec![T::zero(); n];
                for (i, c) in lam.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for (t, r) in img.iter_mut().zip(&rows[i]) {
                        *t = t.clone() + c.clone() * r.clone();
                    }
                }
                &img == lam
            });
            if ok {
                dfs(lattice, fixed, by_norm, rows, out);
            }
            rows.pop();
        }
    }
}

/// Check that a finite set of isometries is a group: contains the identity
/// and is closed under composition and inverse.
pub fn is_group<T: Scalar>(set: &[Isometry<T>]) -> bool {
    let matrices: std::collections::HashSet<_> = set.iter().map(|g| g.matrix.clone()).collect();
    if matrices.len() != set.len() {
        return false;
    }
    let id = Matrix::identity(set.first().map_or(0, |g| g.matrix.nrows()));
    if !matrices.contains(&id) {
        return false;
    }
    set.iter().all(|a| {
        matrices.contains(&a.inverse().matrix)
            && set.iter().all(|b| matrices.contains(&a.matrix.mul(&b.matrix)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::form::FiniteQuadraticForm;
    use crate::standard;
    use num_bigint::BigInt;

    type L = Lattice<BigInt>;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn a1_has_plus_minus_one() {
        let l = standard::a1::<BigInt>();
        let group = isometries(&l, &[], 10_000).unwrap();
        assert_eq!(group.len(), 2);
        assert!(is_group(&group));
    }

    #[test]
    fn l8_stabilizer_of_lambdas() {
        let l = L::from_i64_gram(&[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2]]).unwrap();
        let fixed = vec![
            vec![big(1), big(0), big(0)],
            vec![big(0), big(1), big(0)],
        ];
        let group = isometries(&l, &fixed, 10_000).unwrap();
        assert_eq!(group.len(), 2);
        let nontrivial = group.iter().find(|g| !g.matrix().eq(&Matrix::identity(3))).unwrap();
        // tau -> -tau
        assert_eq!(nontrivial.matrix(), &Matrix::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, -1]]));
    }

    #[test]
    fn l12_stabilizer_reflects_tau() {
        let l = L::from_i64_gram(&[&[2, 0, 1], &[0, 2, 1], &[1, 1, 4]]).unwrap();
        let fixed = vec![
            vec![big(1), big(0), big(0)],
            vec![big(0), big(1), big(0)],
        ];
        let group = isometries(&l, &fixed, 10_000).unwrap();
        assert_eq!(group.len(), 2);
        let nontrivial = group.iter().find(|g| !g.matrix().eq(&Matrix::identity(3))).unwrap();
        // tau -> lambda1 + lambda2 - tau
        assert_eq!(
            nontrivial.matrix(),
            &Matrix::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[1, 1, -1]])
        );
        // and it acts as -id on Disc = Z/12
        let f = FiniteQuadraticForm::of(&l);
        assert!(nontrivial.disc_action(&f).unwrap().is_minus_identity());
    }

    #[test]
    fn full_group_of_a1_squared() {
        // Signed permutations of two orthogonal norm-2 vectors: order 8.
        let l = L::from_i64_gram(&[&[2, 0], &[0, 2]]).unwrap();
        let group = isometries(&l, &[], 10_000).unwrap();
        assert_eq!(group.len(), 8);
        assert!(is_group(&group));
    }

    #[test]
    fn disc_action_of_identity_and_composition() {
        let l = L::from_i64_gram(&[&[2, 0, 1], &[0, 2, 1], &[1, 1, 4]]).unwrap();
        let f = FiniteQuadraticForm::of(&l);
        let group = isometries(&l, &[], 100_000).unwrap();
        assert!(Isometry::identity(l.clone()).disc_action(&f).unwrap().is_identity());
        // Functoriality on the whole (small) group.
        for a in &group {
            for b in &group {
                let ab = a.compose(b).unwrap();
                let lhs = ab.disc_action(&f).unwrap();
                let rhs = a.disc_action(&f).unwrap().compose(&b.disc_action(&f).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn orientation_signs_on_a1_squared() {
        let l = L::from_i64_gram(&[&[2, 0], &[0, 2]]).unwrap();
        let id = Isometry::identity(l.clone());
        assert_eq!(id.orientation_sign().unwrap(), 1);
        let flip = Isometry::from_i64(l.clone(), &[&[-1, 0], &[0, 1]]).unwrap();
        assert_eq!(flip.orientation_sign().unwrap(), -1);
        let minus = Isometry::minus_identity(l.clone());
        assert_eq!(minus.orientation_sign().unwrap(), 1);
        // diag(-1, 1) acts trivially on Disc((A1)^2) = (Z/2)^2.
        let f = FiniteQuadraticForm::of(&l);
        assert!(flip.disc_action(&f).unwrap().is_identity());
        // Indefinite lattices are out of scope for orientation.
        let u = standard::hyperbolic::<BigInt>();
        assert_eq!(
            Isometry::identity(u).orientation_sign().unwrap_err(),
            LatticeError::NotPositiveDefinite
        );
    }

    #[test]
    fn rank_and_definiteness_guards() {
        let u = standard::hyperbolic::<BigInt>();
        assert_eq!(isometries(&u, &[], 1000).unwrap_err(), LatticeError::NotPositiveDefinite);
        let big_lattice = standard::e8::<BigInt>();
        assert_eq!(
            isometries(&big_lattice, &[], 1000).unwrap_err(),
            LatticeError::RankTooLarge { rank: 8, max: 4 }
        );
    }

    #[test]
    fn non_isometry_rejected() {
        let l = standard::a1::<BigInt>();
        assert_eq!(
            Isometry::from_i64(l, &[&[2]]).unwrap_err(),
            LatticeError::NotIsometry
        );
    }
}
