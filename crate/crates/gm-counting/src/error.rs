use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountingError {
    #[error("d must be positive, got {0}")]
    NonPositive(u64),
    #[error("d must be even, got {0}")]
    OddInput(u64),
    #[error("d = {d} fails condition (**): {reason}")]
    StarStarViolated { d: u64, reason: String },
    #[error("untwisted counts require d > 8, got d = {d}")]
    DiscriminantTooSmall { d: u64 },
    #[error("r must be at least 2, got {0}")]
    OrderTooSmall(u64),
    #[error(
        "(d, r) = (2, 2) is refused: the closed formula degenerates to phi(2) * 2^(tau(2)-1) = 1/2, which is not an integer"
    )]
    DegenerateTwoTwo,
    #[error("w must have order exactly r in Hom(Lambda_d, Z/r): gcd of its residues with r must be 1")]
    WrongHomOrder,
    #[error("w must list one residue per basis vector of Lambda_d (21), got {0}")]
    WrongHomLength(usize),
    #[error(transparent)]
    Lattice(#[from] gm_lattice::LatticeError),
}
