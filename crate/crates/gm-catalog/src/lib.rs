//! The lattice catalog for Hodge-special Gushel–Mukai fourfolds.
//!
//! Builds the rank-3 discriminant lattices `L_d` with their explicit
//! primitive embeddings into the ambient `Λ ≅ I_{22,2}`, enumerates the
//! marking group `G′(L_d)` and verifies its −id action, runs the
//! glue/extension argument identifying marked and labelled moduli, decides
//! K3 association via discriminant forms, and performs the Mukai-lattice
//! orientation checks.

pub mod ambient;
pub mod error;
pub mod k3;
pub mod ld;
pub mod marking;
pub mod mukai;
pub mod structure;

pub use error::CatalogError;
pub use k3::k3_association;
pub use ld::{admissible_range, embed_ld, gram_lambda_d, gram_ld, GMDiscriminant, LdPackage};
pub use marking::{gamma_prime, marking_group, verify_marked_equals_labelled, GlueExtensionReport};
pub use mukai::{mukai_checks, MukaiReport};
pub use structure::disc_structure_failure;
