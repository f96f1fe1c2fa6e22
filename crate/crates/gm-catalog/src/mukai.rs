//! Checks around the Mukai lattice `U⊕⁴ ⊕ E₈(−1)⊕²`: the primitive `A₁⊕²`
//! spanned by the two natural classes, its complement, and the
//! orientation-reversing isometry supported on it.

use gm_lattice::form::FiniteQuadraticForm;
use gm_lattice::glue::glue_map;
use gm_lattice::isometry::Isometry as GenIsometry;
use gm_lattice::matrix::Matrix as GenMatrix;
use gm_lattice::standard;
use gm_lattice::{Embedding, Int};

use crate::error::CatalogError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MukaiReport {
    pub complement_rank: usize,
    pub complement_signature: (usize, usize),
    pub complement_even: bool,
    pub glue_b_reversing: bool,
    pub glue_q_reversing: bool,
    pub disc_action_trivial: bool,
    pub orientation_sign: i32,
}

impl MukaiReport {
    pub fn pass(&self) -> bool {
        self.complement_rank == 22
            && self.complement_signature == (2, 20)
            && self.complement_even
            && self.glue_b_reversing
            && self.glue_q_reversing
            && self.disc_action_trivial
            && self.orientation_sign == -1
    }
}

/// Runs the fixed Mukai-lattice verification:
/// (a) `A₁⊕²` embedded as `u+w` in the first two U blocks is primitive with
///     complement of signature (2, 20) and anti-isometric discriminant form;
/// (b) `diag(−1, 1)` on `A₁⊕²` acts trivially on the discriminant group and
///     reverses orientation.
pub fn mukai_checks() -> Result<MukaiReport, CatalogError> {
    let mukai = standard::mukai::<Int>();
    let mut r1 = vec![Int::from(0); 24];
    r1[0] = Int::from(1);
    r1[1] = Int::from(1);
    let mut r2 = vec![Int::from(0); 24];
    r2[2] = Int::from(1);
    r2[3] = Int::from(1);
    let a_pair = Embedding::new(mukai, GenMatrix::from_rows(vec![r1, r2]))?;
    debug_assert!(a_pair.is_primitive());
    let complement = a_pair.orthogonal_complement()?;
    let comp_lattice = complement.sublattice()?;

    let glue = glue_map(&a_pair, &complement)?;

    let a1a1 = a_pair.sublattice()?;
    let flip = GenIsometry::new(a1a1.clone(), GenMatrix::from_i64(&[&[-1, 0], &[0, 1]]))?;
    let f = FiniteQuadraticForm::of(&a1a1);

    Ok(MukaiReport {
        complement_rank: comp_lattice.rank(),
        complement_signature: comp_lattice.signature(),
        complement_even: comp_lattice.is_even(),
        glue_b_reversing: glue.is_b_reversing(),
        glue_q_reversing: glue.is_q_reversing()?,
        disc_action_trivial: flip.disc_action(&f)?.is_identity(),
        orientation_sign: flip.orientation_sign()?,
    })
}
