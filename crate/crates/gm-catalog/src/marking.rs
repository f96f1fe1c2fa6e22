//! The marking group `G′(L_d)` and the gluing argument identifying marked
//! and labelled moduli.

use gm_lattice::form::FiniteQuadraticForm;
use gm_lattice::glue::{extends_to_ambient, glue_map};
use gm_lattice::isometry::{isometries, Isometry as GenIsometry};
use gm_lattice::{Int, Isometry};

use crate::error::CatalogError;
use crate::ld::{embed_ld, gram_ld};

/// `G′(L_d) = {g ∈ O(L_d) : g(λᵢ) = λᵢ}`, enumerated.
///
/// Postconditions asserted: the group has order exactly 2 and its
/// nontrivial element acts as −id on `Disc(L_d)` (a group-level statement,
/// checked on the bilinear-only presentation when `d ≡ 2 mod 8`).
pub fn marking_group(d: u64, variant: u8, cap: usize) -> Result<Vec<Isometry>, CatalogError> {
    let l = gram_ld(d, variant)?;
    let fixed = vec![
        vec![Int::from(1), Int::from(0), Int::from(0)],
        vec![Int::from(0), Int::from(1), Int::from(0)],
    ];
    let mut group = isometries(&l, &fixed, cap)?;
    if group.len() != 2 {
        return Err(CatalogError::MarkingPostcondition {
            d,
            what: format!("expected order 2, found {}", group.len()),
        });
    }
    // Identity first.
    group.sort_by_key(|g| !g.matrix().eq(&gm_lattice::Matrix::identity(3)));
    let f = FiniteQuadraticForm::of(&l);
    if !group[1].disc_action(&f)?.is_minus_identity() {
        return Err(CatalogError::MarkingPostcondition {
            d,
            what: "nontrivial element does not act as -id on Disc(L_d)".into(),
        });
    }
    Ok(group)
}

/// The nontrivial element `γ′` of `G′(L_d)`.
pub fn gamma_prime(d: u64, variant: u8, cap: usize) -> Result<Isometry, CatalogError> {
    Ok(marking_group(d, variant, cap)?.remove(1))
}

/// Outcome of the glue/extension verification for one `(d, variant)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlueExtensionReport {
    pub d: u64,
    pub variant: u8,
    /// |H| = |Disc L_d| = |Disc L_d^⊥| = d.
    pub glue_order: Int,
    /// The glue is a total bijection reversing b mod ℤ.
    pub b_reversing: bool,
    /// `γ′ ⊕ −id` extends to an isometry of the ambient `Λ`.
    pub extends: bool,
}

impl GlueExtensionReport {
    pub fn pass(&self) -> bool {
        self.glue_order == Int::from(self.d) && self.b_reversing && self.extends
    }
}

/// The lattice-theoretic kernel of the marked = labelled identification:
/// glue `(L_d, L_d^⊥)` inside `Λ` and check that `γ′ ⊕ −id` extends.
pub fn verify_marked_equals_labelled(
    d: u64,
    variant: u8,
    cap: usize,
) -> Result<GlueExtensionReport, CatalogError> {
    let pkg = embed_ld(d, variant)?;
    let glue = glue_map(&pkg.embedding, &pkg.complement)?;
    let gamma = gamma_prime(d, variant, cap)?;
    let minus = GenIsometry::minus_identity(pkg.complement.sublattice()?);
    let extends = extends_to_ambient(&gamma, &minus, &glue)?;
    Ok(GlueExtensionReport {
        d,
        variant,
        glue_order: glue.order(),
        b_reversing: glue.is_b_reversing(),
        extends,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use gm_lattice::matrix::Matrix;
    use gm_lattice::{Int, DEFAULT_CANDIDATE_CAP as CAP};

    #[test]
    fn gamma_prime_matches_the_closed_forms() {
        // d = 8: τ ↦ −τ.
        let g = gamma_prime(8, 1, CAP).unwrap();
        assert_eq!(g.matrix(), &Matrix::<Int>::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, -1]]));
        // d = 10, variant 2: τ ↦ λ₂ − τ.
        let g = gamma_prime(10, 2, CAP).unwrap();
        assert_eq!(g.matrix(), &Matrix::<Int>::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 1, -1]]));
        // d = 12: τ ↦ λ₁ + λ₂ − τ.
        let g = gamma_prime(12, 1, CAP).unwrap();
        assert_eq!(g.matrix(), &Matrix::<Int>::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[1, 1, -1]]));
    }

    #[test]
    fn glue_extension_small_cases() {
        for (d, variant) in [(12, 1), (10, 1), (10, 2), (16, 1)] {
            let rep = verify_marked_equals_labelled(d, variant, CAP).unwrap();
            assert!(rep.pass(), "d = {d} variant {variant}: {rep:?}");
        }
    }

    #[test]
    fn mixed_pair_fails_on_high_order_torsion() {
        // (γ′, id) does not extend for d = 12: Disc has elements of order
        // 12, where −id ≠ id.
        let pkg = embed_ld(12, 1).unwrap();
        let glue = gm_lattice::glue::glue_map(&pkg.embedding, &pkg.complement).unwrap();
        let gamma = gamma_prime(12, 1, CAP).unwrap();
        let id = GenIsometry::identity(pkg.complement.sublattice().unwrap());
        assert!(!extends_to_ambient(&gamma, &id, &glue).unwrap());
        // (id, id) always extends.
        let id_m = GenIsometry::identity(pkg.lattice.clone());
        assert!(extends_to_ambient(&id_m, &id, &glue).unwrap());
    }
}
