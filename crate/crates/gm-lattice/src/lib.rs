//! Exact-arithmetic toolkit for integral quadratic lattices.
//!
//! Everything is computed over arbitrary-precision integers and exact
//! rationals: Gram-matrix lattices with signatures by fraction-free
//! elimination, Smith normal form with transforms, sublattice embeddings and
//! saturated orthogonal complements, discriminant quadratic/bilinear forms
//! with exhaustive isomorphism search, isometry-group enumeration for small
//! definite lattices, and the discriminant-glue calculus for primitive pairs
//! inside unimodular lattices.
//!
//! The algorithms are generic over the integer scalar (anything implementing
//! [`scalar::Scalar`]); the type aliases below pin the instantiation used by
//! the rest of the workspace.

pub mod embedding;
pub mod error;
pub mod form;
pub mod glue;
pub mod isometry;
pub mod json;
pub mod lattice;
pub mod matrix;
pub mod scalar;
pub mod snf;
pub mod standard;
pub mod svec;

pub use error::LatticeError;

/// The workspace-wide integer scalar.
pub type Int = num_bigint::BigInt;
/// Exact rationals over [`Int`].
pub type Rat = num_rational::Ratio<Int>;

pub type Lattice = lattice::Lattice<Int>;
pub type Matrix = matrix::Matrix<Int>;
pub type RatMatrix = matrix::Matrix<Rat>;
pub type Embedding = embedding::Embedding<Int>;
pub type FiniteQuadraticForm = form::FiniteQuadraticForm<Int>;
pub type FormMap = form::FormMap<Int>;
pub type Isometry = isometry::Isometry<Int>;
pub type GlueMap = glue::GlueMap<Int>;

/// Default cap on short-vector enumeration work.
pub const DEFAULT_CANDIDATE_CAP: usize = 10_000_000;
