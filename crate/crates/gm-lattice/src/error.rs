use thiserror::Error;

/// Errors from lattice construction and the exact-arithmetic operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("gram matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("gram matrix is not symmetric (entries ({i},{j}) and ({j},{i}) differ)")]
    NotSymmetric { i: usize, j: usize },
    #[error("gram matrix is singular (zero determinant)")]
    Singular,
    #[error("gram matrix must have positive rank")]
    EmptyGram,
    #[error("rescale factor must be nonzero")]
    ZeroScale,
    #[error("basis rows are not linearly independent")]
    DependentRows,
    #[error("basis rows do not fit the ambient lattice (ambient rank {ambient}, got width {width})")]
    AmbientMismatch { ambient: usize, width: usize },
    #[error("induced form is degenerate: the orthogonal complement overlaps the sublattice")]
    DegenerateSublattice,
    #[error("orthogonal complement is trivial")]
    TrivialComplement,
    #[error("quadratic-level comparison requires even source lattices")]
    OddSourceQuadratic,
    #[error("vector is not in the dual lattice; no discriminant class")]
    NotInDual,
    #[error("matrix does not preserve the gram matrix (not an isometry)")]
    NotIsometry,
    #[error("operation requires a positive definite lattice")]
    NotPositiveDefinite,
    #[error("isometry enumeration is limited to rank <= {max}, got rank {rank}; no brute-force bound beyond that")]
    RankTooLarge { rank: usize, max: usize },
    #[error("short-vector candidate cap of {cap} exceeded; raise the cap to continue")]
    CandidateCapExceeded { cap: usize },
    #[error("glue requires a unimodular ambient lattice (|det| = 1)")]
    AmbientNotUnimodular,
    #[error("glue requires mutually orthogonal sublattices")]
    NotOrthogonal,
    #[error("glue requires primitive sublattices")]
    NotPrimitive,
    #[error("glue requires the sublattices to span the ambient up to finite index")]
    NotFiniteIndex,
    #[error("embeddings live in different ambient lattices")]
    AmbientsDiffer,
    #[error("isometry does not act on the expected lattice")]
    LatticeMismatch,
    #[error("discriminant group too large to enumerate ({order} elements)")]
    GroupTooLarge { order: String },
}
