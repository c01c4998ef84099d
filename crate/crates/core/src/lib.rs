//! Exact-arithmetic invariants of nilpotent Lie algebras and their coadjoint orbits.
//!
//! Everything is computed over the rationals: ranks and kernels of the Kirillov
//! form `B_ξ(X, Y) = ⟨ξ, [X, Y]⟩`, the index and real rank of an algebra,
//! flatness of orbits, class-T verdicts and a dimension-≤5 classifier.

pub mod catalog;
pub mod classify;
pub mod coadjoint;
pub mod error;
pub mod frontend;
pub mod lie;
pub mod linalg;
pub mod poly;

pub use error::{Error, Result};
pub use lie::{Covector, LieAlgebra, Validation};
pub use linalg::{RatMatrix, Rational, Subspace};
pub use poly::{MultiPoly, PolyIdeal};
