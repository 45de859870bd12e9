//! Exact supertropical matrix algebra.
//!
//! Scalars live in `T = R ∪ R^ν ∪ {-inf}` with exact rational magnitudes.
//! The crate covers determinants and their achieving permutations, the
//! matrix digraph, tropical dependence and rank, pseudo inverses, and
//! pure-real solutions of homogeneous systems.

mod assignment;
pub mod corpus;
pub mod determinant;
pub mod digraph;
pub mod error;
pub mod inverse;
pub mod linsys;
pub mod rank;
pub mod semiring;
pub mod tensor;

pub use determinant::{det, DetMethod, RankDefectCertificate};
pub use error::{Result, TropError};
pub use rank::{DependenceWitness, MinorLocation, WitnessRoute};
pub use semiring::{MaxPlusScalar, Rational, TropScalar};
pub use tensor::{TropMatrix, TropVector};
