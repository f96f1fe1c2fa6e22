//! The ambient unimodular lattice `Λ ≅ I_{22,2}` in a basis adapted to the
//! vanishing lattice.
//!
//! `Λ` is presented as `E₈ ⊕ E₈ ⊕ U ⊕ U ⊕ W ⊕ W` with `W = [[2,1],[1,1]]`:
//! odd, unimodular, signature (22, 2), hence isomorphic to `I_{22,2}`. Each
//! `W` block is spanned by a norm-2 vector `a` and a norm-1 vector `g` with
//! `a·g = 1`; setting `λ = 2g − a` gives the norm-2 generators of `Λ_G` with
//! `a ⊥ λ`, so the orthogonal complement of `Λ_G = ⟨λ₁, λ₂⟩` is exactly
//! `E₈ ⊕ E₈ ⊕ U ⊕ U ⊕ ⟨a₁⟩ ⊕ ⟨a₂⟩ = Λ₀₀`, which is even. That evenness is
//! what the diagonal basis of `I_{22,2}` cannot provide, and every `L_d`
//! below contains `Λ_G`, so its complement lands inside `Λ₀₀`.

use gm_lattice::lattice::Lattice as GenLattice;
use gm_lattice::matrix::Matrix as GenMatrix;
use gm_lattice::standard;
use gm_lattice::{Int, Lattice, Matrix};

/// Ambient rank.
pub const AMBIENT_RANK: usize = 24;
/// Index of the first U block's first basis vector (`u₁`).
pub const U1: usize = 16;
/// Index of the first U block's second basis vector (`w₁`).
pub const W1: usize = 17;
/// Indices of `a₁, g₁` (first W block) and `a₂, g₂` (second W block).
pub const A1_IDX: usize = 20;
pub const G1_IDX: usize = 21;
pub const A2_IDX: usize = 22;
pub const G2_IDX: usize = 23;

fn w_block() -> Lattice {
    GenLattice::from_i64_gram(&[&[2, 1], &[1, 1]]).unwrap()
}

/// The glued presentation of `I_{22,2}`.
pub fn ambient() -> Lattice {
    let e8 = standard::e8::<Int>();
    let u = standard::hyperbolic::<Int>();
    let w = w_block();
    GenLattice::direct_sum_all(&[&e8, &e8, &u, &u, &w, &w])
}

fn unit_row(idx: usize) -> Vec<Int> {
    let mut v = vec![Int::from(0); AMBIENT_RANK];
    v[idx] = Int::from(1);
    v
}

/// `λ₁ = 2g₁ − a₁`.
pub fn lambda1_row() -> Vec<Int> {
    let mut v = vec![Int::from(0); AMBIENT_RANK];
    v[A1_IDX] = Int::from(-1);
    v[G1_IDX] = Int::from(2);
    v
}

/// `λ₂ = 2g₂ − a₂`.
pub fn lambda2_row() -> Vec<Int> {
    let mut v = vec![Int::from(0); AMBIENT_RANK];
    v[A2_IDX] = Int::from(-1);
    v[G2_IDX] = Int::from(2);
    v
}

/// `u₁ + k·w₁`: the norm-2k workhorse inside the first U block.
pub fn u_plus_kw_row(k: u64) -> Vec<Int> {
    let mut v = vec![Int::from(0); AMBIENT_RANK];
    v[U1] = Int::from(1);
    v[W1] = Int::from(k as i64);
    v
}

pub fn g1_row() -> Vec<Int> {
    unit_row(G1_IDX)
}

pub fn g2_row() -> Vec<Int> {
    unit_row(G2_IDX)
}

/// Row matrix of the `Λ_G = ⟨λ₁, λ₂⟩` embedding.
pub fn lambda_g_rows() -> Matrix {
    GenMatrix::from_rows(vec![lambda1_row(), lambda2_row()])
}

#[cfg(test)]
mod tests {
    use super::*;
    use gm_lattice::Embedding;

    #[test]
    fn ambient_is_odd_unimodular_22_2() {
        let l = ambient();
        assert_eq!(l.rank(), 24);
        assert_eq!(l.signature(), (22, 2));
        assert!(l.is_unimodular());
        assert!(!l.is_even());
    }

    #[test]
    fn lambda_g_complement_is_the_vanishing_lattice() {
        let l = ambient();
        let lg = Embedding::new(l.clone(), lambda_g_rows()).unwrap();
        assert!(lg.is_primitive());
        let sub = lg.sublattice().unwrap();
        assert_eq!(sub.gram(), standard::a1::<Int>().direct_sum(&standard::a1::<Int>()).gram());
        let comp = lg.orthogonal_complement().unwrap().sublattice().unwrap();
        assert_eq!(comp.rank(), 22);
        assert_eq!(comp.signature(), (20, 2));
        assert!(comp.is_even());
        assert_eq!(comp.det_abs(), Int::from(4));
    }

    #[test]
    fn lambda_g_glue_has_order_four() {
        // |H| = sqrt(det(Λ_G)·det(Λ₀₀)/det(Λ)) = sqrt(4·4/1) = 4,
        // b-reversing (but not q-reversing: the ambient is odd).
        let l = ambient();
        let lg = Embedding::new(l, lambda_g_rows()).unwrap();
        let comp = lg.orthogonal_complement().unwrap();
        let glue = gm_lattice::glue::glue_map(&lg, &comp).unwrap();
        assert_eq!(glue.order(), Int::from(4));
        assert!(glue.is_b_reversing());
        assert!(!glue.is_q_reversing().unwrap());
    }
}
