//! Mid-range sweeps of the catalog verifications (the acceptance suite runs
//! the full ranges; these keep the crate self-checking).

use gm_catalog::{
    admissible_range, disc_structure_failure, embed_ld, gamma_prime, k3_association,
    verify_marked_equals_labelled,
};
use gm_counting::satisfies_star_star;
use gm_lattice::form::FiniteQuadraticForm;
use gm_lattice::{Int, DEFAULT_CANDIDATE_CAP as CAP};

#[test]
fn embeddings_hold_their_postconditions_to_80() {
    for disc in admissible_range(8, 80) {
        for v in 1..=disc.variants {
            let pkg = embed_ld(disc.d, v).unwrap();
            assert!(pkg.embedding.is_primitive());
            assert_eq!(pkg.lattice.det(), &Int::from(disc.d));
            let comp = pkg.complement.sublattice().unwrap();
            assert!(comp.is_even());
            assert_eq!(comp.signature(), (19, 2));
            assert_eq!(comp.det_abs(), Int::from(disc.d));
            assert!(pkg.complement.is_primitive());
        }
    }
}

#[test]
fn disc_structure_and_gamma_to_60() {
    for disc in admissible_range(8, 60) {
        for v in 1..=disc.variants {
            assert_eq!(disc_structure_failure(disc.d, v).unwrap(), None, "d={}", disc.d);
            let g = gamma_prime(disc.d, v, CAP).unwrap();
            let f = FiniteQuadraticForm::of(g.lattice());
            assert!(g.disc_action(&f).unwrap().is_minus_identity());
        }
    }
}

#[test]
fn glue_extension_to_48() {
    for disc in admissible_range(8, 48) {
        for v in 1..=disc.variants {
            let rep = verify_marked_equals_labelled(disc.d, v, CAP).unwrap();
            assert!(rep.pass(), "{rep:?}");
            assert_eq!(rep.glue_order, Int::from(disc.d));
        }
    }
}

#[test]
fn k3_association_agrees_with_predicate_to_80() {
    for disc in admissible_range(8, 80) {
        // Internal cross-assertion returns Err on disagreement.
        let v = k3_association(disc.d).unwrap();
        assert_eq!(v, satisfies_star_star(disc.d), "d={}", disc.d);
    }
}
