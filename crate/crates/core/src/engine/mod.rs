//! Discriminant expansions, their numerical evaluation and the brute-force oracle.

pub mod discriminant;
pub mod expansion;
pub mod power_product;

pub use discriminant::{
    discriminant, discriminant_from_traces, discriminant_general, discriminant_oracle,
    discriminant_oracle_with, discriminant_with, evaluate_class, trace_power, SYMMETRY_TOL,
};
pub use expansion::{
    build_expansion, build_expansion_with, cached_expansion, orbit_size, InvariantExpansion,
    SUPPORTED_RANKS,
};
pub use power_product::{normalize_key, power_product};
