//! Kernel sublattices `T_w ⊂ Λ_d` and the discriminant-surjectivity check.

use std::collections::HashSet;

use num_integer::Integer;

use gm_lattice::form::{form_automorphisms, FiniteQuadraticForm, Level};
use gm_lattice::isometry::isometries;
use gm_lattice::lattice::Lattice;
use gm_lattice::matrix::Matrix;
use gm_lattice::snf::smith;
use gm_lattice::standard;
use gm_lattice::{Embedding, Int};

use crate::error::CountingError;

/// Rank of `Λ_d`, hence the length of a residue vector describing
/// `w ∈ Hom(Λ_d, ℤ/r)`.
pub const LAMBDA_D_RANK: usize = 21;

/// The index-r kernel sublattice `T_w = ker(w) ⊂ Λ_d`, for
/// `w ∈ Hom(Λ_d, ℤ/r)` given as residues against the block basis of `Λ_d`
/// (two E₈(−1) blocks, two U blocks, the ⟨−d⟩ generator).
///
/// `w` must have order exactly `r`, i.e. gcd(r, residues) = 1. The result is
/// an embedding of saturation index `r` with `|det| = d·r²`.
pub fn make_tw(d: u64, r: u64, w: &[i64]) -> Result<Embedding, CountingError> {
    if d == 0 {
        return Err(CountingError::NonPositive(d));
    }
    if !d.is_multiple_of(2) {
        return Err(CountingError::OddInput(d));
    }
    if r < 2 {
        return Err(CountingError::OrderTooSmall(r));
    }
    if w.len() != LAMBDA_D_RANK {
        return Err(CountingError::WrongHomLength(w.len()));
    }
    let r_int = Int::from(r);
    let residues: Vec<Int> = w.iter().map(|&x| Int::from(x).mod_floor(&r_int)).collect();
    let order_gcd = residues.iter().fold(r_int.clone(), |acc, x| acc.gcd(x));
    if order_gcd != Int::from(1) {
        return Err(CountingError::WrongHomOrder);
    }

    let ambient = standard::lambda_d(&Int::from(d));
    // ker(w) is the projection of the saturated integer kernel of
    // (v, t) ↦ v·w + t·r, dropping the auxiliary coordinate.
    let mut col: Vec<Vec<Int>> = residues.into_iter().map(|x| vec![x]).collect();
    col.push(vec![r_int]);
    let s = smith(&Matrix::from_rows(col));
    assert_eq!(s.rank(), 1);
    let rows: Vec<Vec<Int>> =
        (1..=LAMBDA_D_RANK).map(|i| s.p.row(i)[..LAMBDA_D_RANK].to_vec()).collect();
    let emb = Embedding::new(ambient, Matrix::from_rows(rows))?;
    debug_assert_eq!(emb.saturation_index(), Int::from(r));
    Ok(emb)
}

/// Is `O(L) → O(Disc L)` surjective? Both sides are enumerated: the
/// isometry group by backtracking (positive definite, rank ≤ 4), the
/// form-automorphism group by exhaustive generator-image search (preserving
/// q on even lattices, b on odd ones).
pub fn disc_surjectivity(l: &Lattice<Int>, cap: usize) -> Result<bool, CountingError> {
    let group = isometries(l, &[], cap)?;
    let f = FiniteQuadraticForm::of(l);
    let level = if l.is_even() { Level::Quadratic } else { Level::Bilinear };
    let autos = form_automorphisms(&f, level)?;
    let mut image = HashSet::new();
    for g in &group {
        image.insert(g.disc_action(&f)?);
    }
    let auto_set: HashSet<_> = autos.iter().cloned().collect();
    for a in &image {
        assert!(auto_set.contains(a), "induced action must preserve the form");
    }
    Ok(image.len() == autos.len())
}
