//! Exact-arithmetic toolkit for finite-dimensional associative algebras:
//! rational linear algebra, structure-constant algebras, zero-product /
//! zero-Lie-product / two-sided determinedness deciders with certificates,
//! derivation and multiplier spaces, and the constructions used by the
//! regression suite.

pub mod algebra;
pub mod constructions;
pub mod decision;
pub mod error;
pub mod io;
pub mod linalg;
pub mod maps;
pub mod poly;
pub mod span;

pub use algebra::{
    is_diagonalizable, minimal_polynomial, primary_decomposition, Algebra, PrimaryBlock,
    PrimaryDecomposition,
};
pub use decision::{
    decide_two_sided_zpd, decide_zlpd, decide_zpd, factor_bilinear, verify_eq3, BilinearForm,
    Certificate, FactorMode, FactorResult, FieldNote, LinearFunctional, Property, Verdict,
};
pub use error::{Error, Result};
pub use linalg::{frac, int, parse_scalar, scalar_to_string, RatMatrix, Scalar, Subspace};
pub use poly::Polynomial;
pub use span::{SamplerConfig, SpanMethod, SpanReport};
