//! Finite-dimensional associative algebras presented by an ambient matrix
//! basis, with structure constants recomputed and validated at construction.

mod core;
pub mod spectral;

pub use core::{Algebra, Side};
pub use spectral::{
    is_diagonalizable, minimal_polynomial, primary_decomposition, PrimaryBlock,
    PrimaryDecomposition,
};
