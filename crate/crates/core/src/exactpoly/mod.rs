//! Exact rational arithmetic on sparse multivariate polynomials, the grevlex
//! order, multivariate division, a desk-scale Buchberger engine, and
//! subresultant combinations.

mod divide;
mod exponent;
mod groebner;
mod poly;
pub mod ratio;
mod subresultant;

pub use divide::{poly_reduce, remainder};
pub use exponent::{degree_monomials_desc, grevlex_cmp, ExponentVec, MonomialOrder};
pub use groebner::{buchberger_basis, DEFAULT_SPAIR_BUDGET};
pub use poly::{parse_poly, MultiPoly};
pub use subresultant::subresultant_pair;
