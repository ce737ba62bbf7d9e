//! Gradients, characteristic polynomials, powers, inverses and
//! Cayley–Hamilton residuals.

pub mod adjugate;
pub mod charpoly;
pub mod gradient;
pub mod powers;

pub use adjugate::{
    adjugate_epsilon, contract_leading, det_epsilon, identity_defect, inverse_even_rank,
    inverse_rank2,
};
pub use charpoly::{
    ch_residual_rank2, char_poly, newton_traces, rank2_discriminants, shifted,
    CharacteristicPolynomial, NewtonTraces,
};
pub use gradient::{grad_a, grad_a_with, grad_delta, grad_delta_with};
pub use powers::{
    bracket_trace, ch_residual_rank4, ch_residual_rank4_with, power_tensor, power_tensor_with,
};
