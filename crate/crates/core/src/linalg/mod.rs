//! Exact integer linear algebra: Hermite and Smith normal forms, lattice
//! quotients, and ranks over prime fields.

mod int;
mod invariants;
mod lattice;
mod matrix;
mod modp;

use thiserror::Error;

pub use int::Int;
pub use invariants::{factorize, factorize_u64, gcd_u64, is_prime, GroupInvariants};
pub use lattice::{lattice_quotient, ZLattice};
pub use matrix::{hermite_normal_form, smith_decomposition, smith_normal_form, IntMatrix, SmithDecomposition};
pub use modp::{rank_mod_p, FpSpace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("sublattice is not contained in the ambient lattice (row {row})")]
    ContainmentViolation { row: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("column counts differ: {0} vs {1}")]
    ShapeMismatch(usize, usize),
}
