//! Arithmetic layer for the discriminant theory of Gushel–Mukai fourfolds:
//! the K3-association conditions (**) and (**'), Fourier–Mukai partner
//! counts in the untwisted and twisted settings, square decompositions of
//! twisted discriminants, kernel sublattices `T_w`, and the
//! discriminant-surjectivity check.

pub mod arith;
pub mod counts;
pub mod error;
pub mod kernels;

pub use arith::{euler_phi, factorize, satisfies_star_star, satisfies_star_star_prime, tau};
pub use counts::{
    twisted_counts, twisted_decompositions, twisted_report, untwisted_counts, CountReport,
    DecompositionCounts, TwistedCounts, TwistedReport,
};
pub use error::CountingError;
pub use kernels::{disc_surjectivity, make_tw, LAMBDA_D_RANK};
