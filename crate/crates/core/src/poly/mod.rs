//! Sparse multivariate polynomials over the rationals, symbolic Pfaffians of the
//! Kirillov form, and a Buchberger engine for radical-membership certificates.

mod groebner;
mod multipoly;
mod skew;

pub use groebner::{radical_membership, EffortExhausted, Membership, PolyIdeal, DEFAULT_EFFORT_CAP};
pub use multipoly::{Monomial, MultiPoly};
pub use skew::{combinations, sub_pfaffians, symbolic_pfaffian, symbolic_skew_form, PolyMatrix};
