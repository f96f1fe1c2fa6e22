//! The K3-association criterion: `L_d^⊥ ≅ Λ_d(−1)` as a discriminant-form
//! isomorphism test, cross-asserted against the arithmetic condition (**).

use gm_lattice::form::{forms_isomorphic, FiniteQuadraticForm, Level};
use gm_lattice::Int;

use gm_counting::satisfies_star_star;

use crate::error::CatalogError;
use crate::ld::{embed_ld, gram_lambda_d, GMDiscriminant};

/// Does a very general GM fourfold of discriminant `d` have a
/// Hodge-associated K3 surface?
///
/// Decided lattice-theoretically: `L_d^⊥` and `Λ_d(−1)` must share the
/// signature (19, 2) and have isomorphic discriminant quadratic forms
/// (uniqueness in the genus does the rest for these indefinite lattices).
/// The verdict is cross-asserted against the arithmetic predicate (**);
/// disagreement is returned as a build-failing defect.
pub fn k3_association(d: u64) -> Result<bool, CatalogError> {
    let disc = GMDiscriminant::new(d)?;
    let predicate = satisfies_star_star(d);
    let verdict = if disc.residue == 0 {
        // d = 0 mod 8 fails the congruence half of (**) outright; no form
        // comparison is needed (and the groups differ already).
        false
    } else {
        let pkg = embed_ld(d, 1)?;
        let perp = pkg.complement.sublattice()?;
        let target = gram_lambda_d(d)?.rescale(&Int::from(-1))?;
        debug_assert_eq!(target.signature(), (19, 2));
        if perp.signature() != target.signature() {
            false
        } else {
            let f_perp = FiniteQuadraticForm::of(&perp);
            let f_target = FiniteQuadraticForm::of(&target);
            forms_isomorphic(&f_perp, &f_target, Level::Quadratic)?.is_some()
        }
    };
    if verdict != predicate {
        return Err(CatalogError::K3CrossCheckFailed { d, lattice_verdict: verdict, predicate });
    }
    Ok(verdict)
}
