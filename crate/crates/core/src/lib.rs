//! Polynomial invariants of hypermatrices: discriminants built from signed
//! permutation tuples, their semi-magic-square expansions, gradients,
//! Cayley–Hamilton residuals, and closed forms for small cases.

pub mod calculus;
pub mod combinatorics;
pub mod contraction;
pub mod engine;
pub mod error;
pub mod limits;
mod network;
pub mod perm;
pub mod special;
pub mod suite;
pub mod tensor;

pub use contraction::contract_tuple;
pub use error::{Error, Result};
pub use limits::{Limits, DEFAULT_CAP};
pub use perm::{Permutation, PermutationTuple};
pub use tensor::{
    fd_gradient, make_epsilon, make_unit_delta, make_unit_delta_covariant, symmetrize,
    transform_contravariant, transform_covariant, HyperMatrix, MatrixTransform, Variance,
};
