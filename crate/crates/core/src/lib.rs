//! Exact construction, verification and cross-validation of rational Waring
//! decompositions of monomials.
//!
//! For a monomial `X_0^a_0 ... X_n^a_n` the crate builds a structured set of
//! rational projective points annihilating it, solves for the coefficients of
//! a power-sum representation of size `((a_0+1)...(a_n+1) - (a_0-1)...(a_n-1)) / 2`
//! by exact linear algebra, and re-expands the result to certify it. Monomial
//! initial-ideal and Hilbert-function machinery cross-checks that the point
//! construction really is cut out by the generator ideal.

pub mod apolarpoints;
pub mod bounds;
pub mod decomposer;
pub mod error;
pub mod exactpoly;
pub mod generators;
pub mod initialideal;
pub(crate) mod linalg;

pub use error::{Error, Result};
