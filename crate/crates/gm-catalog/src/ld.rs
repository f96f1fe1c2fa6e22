//! The rank-3 discriminant lattices `L_d` and their explicit primitive
//! embeddings into the ambient `Λ`.

use gm_lattice::lattice::Lattice as GenLattice;
use gm_lattice::matrix::Matrix as GenMatrix;
use gm_lattice::standard;
use gm_lattice::{Embedding, Int, Lattice};

use crate::ambient::{ambient, g1_row, g2_row, lambda1_row, lambda2_row, u_plus_kw_row};
use crate::error::CatalogError;

/// An admissible Gushel–Mukai discriminant: `d ≡ 0, 2, 4 mod 8`, positive.
/// Two inequivalent embeddings of `L_d` exist exactly when `d ≡ 2 mod 8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GMDiscriminant {
    pub d: u64,
    pub residue: u64,
    pub variants: u8,
}

impl GMDiscriminant {
    pub fn new(d: u64) -> Result<Self, CatalogError> {
        if d == 0 {
            return Err(CatalogError::NonPositive(d));
        }
        let residue = d % 8;
        if !matches!(residue, 0 | 2 | 4) {
            return Err(CatalogError::BadResidue { d, residue });
        }
        Ok(GMDiscriminant { d, residue, variants: if residue == 2 { 2 } else { 1 } })
    }

    pub fn check_variant(&self, variant: u8) -> Result<(), CatalogError> {
        match variant {
            1 => Ok(()),
            2 if self.variants == 2 => Ok(()),
            2 => Err(CatalogError::VariantUnavailable(self.d)),
            v => Err(CatalogError::BadVariant(v)),
        }
    }
}

/// All admissible discriminants in `lo..=hi`.
pub fn admissible_range(lo: u64, hi: u64) -> Vec<GMDiscriminant> {
    (lo..=hi).filter_map(|d| GMDiscriminant::new(d).ok()).collect()
}

/// The Gram matrix of `L_d` in the basis `λ₁, λ₂, τ`.
///
/// The τ-diagonal entry is `d/4`, `(d+2)/4`, `(d+4)/4` in the residue
/// classes 0, 2, 4 mod 8, which is what `det = d` forces. (Variant 1 pairs
/// τ with λ₁, variant 2 with λ₂; they are swapped by `λ₁ ↔ λ₂`.)
pub fn gram_ld(d: u64, variant: u8) -> Result<Lattice, CatalogError> {
    let disc = GMDiscriminant::new(d)?;
    disc.check_variant(variant)?;
    let rows: Vec<Vec<i64>> = match disc.residue {
        0 => {
            let t = (d / 4) as i64;
            vec![vec![2, 0, 0], vec![0, 2, 0], vec![0, 0, t]]
        }
        2 => {
            let t = ((d + 2) / 4) as i64;
            match variant {
                1 => vec![vec![2, 0, 1], vec![0, 2, 0], vec![1, 0, t]],
                _ => vec![vec![2, 0, 0], vec![0, 2, 1], vec![0, 1, t]],
            }
        }
        _ => {
            let t = ((d + 4) / 4) as i64;
            vec![vec![2, 0, 1], vec![0, 2, 1], vec![1, 1, t]]
        }
    };
    let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    Ok(GenLattice::from_i64_gram(&refs).expect("L_d gram is symmetric and nonsingular"))
}

/// `Λ_d = E₈(−1)⊕² ⊕ U⊕² ⊕ I₁(−d)`, the primitive middle cohomology of a
/// degree-d polarized K3 surface. Requires even `d` (odd d would give an
/// odd lattice, outside the quadratic-form comparisons used here).
pub fn gram_lambda_d(d: u64) -> Result<Lattice, CatalogError> {
    if d == 0 {
        return Err(CatalogError::NonPositive(d));
    }
    if !d.is_multiple_of(2) {
        return Err(CatalogError::OddLambdaD(d));
    }
    let l = standard::lambda_d(&Int::from(d));
    debug_assert_eq!(l.signature(), (2, 19));
    debug_assert!(l.is_even());
    Ok(l)
}

/// An `L_d` embedded in `Λ`, with its basis roles and complement.
#[derive(Debug, Clone)]
pub struct LdPackage {
    pub d: u64,
    pub variant: u8,
    /// The abstract `L_d` (induced Gram, basis `λ₁, λ₂, τ`).
    pub lattice: Lattice,
    pub embedding: Embedding,
    /// `L_d^⊥`, saturated, even, signature (19, 2).
    pub complement: Embedding,
}

/// Build the explicit primitive embedding `L_d ↪ Λ`.
///
/// `λ₁, λ₂` are the fixed generators of `Λ_G`; τ combines `u₁ + k·w₁` from
/// the first U block with the norm-1 vectors `g₁, g₂` that pair with the
/// λ's: nothing for `d = 8k`, `g₁` (variant 1) or `g₂` (variant 2) for
/// `d = 2 + 8k`, and `g₁ + g₂` for `d = 4 + 8k`.
pub fn embed_ld(d: u64, variant: u8) -> Result<LdPackage, CatalogError> {
    let disc = GMDiscriminant::new(d)?;
    disc.check_variant(variant)?;
    let add = |a: &mut Vec<Int>, b: &[Int]| {
        for (x, y) in a.iter_mut().zip(b) {
            *x += y;
        }
    };
    let k = d / 8;
    let mut tau = u_plus_kw_row(k);
    match disc.residue {
        0 => {}
        2 => add(&mut tau, &(if variant == 1 { g1_row() } else { g2_row() })),
        _ => {
            add(&mut tau, &g1_row());
            add(&mut tau, &g2_row());
        }
    }
    let rows = GenMatrix::from_rows(vec![lambda1_row(), lambda2_row(), tau]);
    let embedding = Embedding::new(ambient(), rows)?;

    // Construction postconditions, machine-checked per d.
    if !embedding.is_primitive() {
        return Err(CatalogError::EmbeddingPostcondition {
            d,
            what: format!("not primitive, saturation index {}", embedding.saturation_index()),
        });
    }
    let expected = gram_ld(d, variant)?;
    if embedding.induced_gram() != expected.gram() {
        return Err(CatalogError::EmbeddingPostcondition {
            d,
            what: "induced gram differs from gram_ld".into(),
        });
    }
    let complement = embedding.orthogonal_complement()?;
    let comp_lattice = complement.sublattice()?;
    if !comp_lattice.is_even() || comp_lattice.signature() != (19, 2) {
        return Err(CatalogError::EmbeddingPostcondition {
            d,
            what: format!(
                "complement must be even of signature (19,2); got even={} signature={:?}",
                comp_lattice.is_even(),
                comp_lattice.signature()
            ),
        });
    }
    Ok(LdPackage { d, variant, lattice: embedding.sublattice()?, embedding, complement })
}
