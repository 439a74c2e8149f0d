//! Linear-map spaces attached to an algebra and a bimodule: derivations and
//! inner derivations, multipliers and the multiplier algebra, Hochschild
//! coboundaries and cocycle spaces, local-witness verification, and
//! zero-product-preserving map analysis.
//!
//! Map-space coordinate convention: a linear map `T` from the algebra
//! (dimension `d`) into a module (dimension `m`) is flattened column by
//! column, so coordinate `k·m + p` is target coordinate `p` of `T(b_k)`.

mod bimodule;
mod hochschild;
mod homomorphism;
mod multiplier;
mod spaces;
mod witness;

pub use bimodule::{Bimodule, LinearMap};
pub use hochschild::{cocycle_space, hochschild_coboundary, MultilinearMap};
pub use homomorphism::{
    check_theorem_multiplier_b, weighted_hom_factor, zero_product_preserving_check,
    MultiplierBReport, WeightedHom,
};
pub use multiplier::{multiplier_algebra, MultiplierAlgebra, MultiplierPair};
pub use spaces::{
    derivation_defect, derivation_space, dual_bimodule, inner_derivation_space, is_left_multiplier,
    leibniz_defect_at, multiplier_defect_at, multiplier_space, weak_amenability_index, DefectReport,
};
pub use witness::{local_witness_check, Region, RegionWitness, ScaledPart, WitnessFlavor};
