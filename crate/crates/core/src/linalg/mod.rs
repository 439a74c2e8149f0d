//! Exact rational dense linear algebra: echelon reduction, kernels, and the
//! subspace calculus every other module builds on.

pub mod matrix;
pub mod scalar;
pub mod subspace;

pub use matrix::{RatMatrix, Rref};
pub use scalar::{frac, int, parse_scalar, scalar_to_string, Scalar};
pub use subspace::{dot, Subspace};
