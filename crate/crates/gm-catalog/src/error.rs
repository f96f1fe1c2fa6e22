use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("discriminant must be positive, got {0}")]
    NonPositive(u64),
    #[error("discriminant d = {d} is {residue} mod 8; admissible discriminants are 0, 2, 4 mod 8")]
    BadResidue { d: u64, residue: u64 },
    #[error("variant must be 1 or 2, got {0}")]
    BadVariant(u8),
    #[error("variant 2 exists only for d = 2 mod 8 (two embeddings), and d = {0} is not")]
    VariantUnavailable(u64),
    #[error("Lambda_d requires even d, got {0}")]
    OddLambdaD(u64),
    #[error("embedding postcondition failed for d = {d}: {what}")]
    EmbeddingPostcondition { d: u64, what: String },
    #[error("marking group postcondition failed for d = {d}: {what}")]
    MarkingPostcondition { d: u64, what: String },
    #[error(
        "k3_association({d}) disagrees with condition (**): lattice verdict {lattice_verdict}, predicate {predicate}; this is a build-failing defect"
    )]
    K3CrossCheckFailed { d: u64, lattice_verdict: bool, predicate: bool },
    #[error(transparent)]
    Lattice(#[from] gm_lattice::LatticeError),
    #[error(transparent)]
    Counting(#[from] gm_counting::CountingError),
}
