//! Exact computations for finite-dimensional Lie algebras over the rationals:
//! non-abelian exterior squares, Schur multipliers, exterior centers and
//! capability, with a complete classification for nilpotent algebras whose
//! derived subalgebra has dimension at most one.

pub mod capability;
pub mod decompose;
pub mod lie;
pub mod linalg;
pub mod multiplier;
pub mod oracle;
pub mod scramble;

pub use lie::{abelian, heisenberg, Ideal, LieAlgebra};
pub use linalg::{RatMatrix, Rational, Subspace};
