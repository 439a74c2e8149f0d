use thiserror::Error;

/// Errors shared across the crate. Every decision procedure either returns a
/// value or one of these; nothing panics on malformed mathematical input.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("cannot parse rational literal {0:?}")]
    BadScalar(String),

    #[error("basis is linearly dependent (rank {rank} < {dim})")]
    DependentBasis { rank: usize, dim: usize },

    #[error("span is not multiplicatively closed: product of basis {i} and {j} leaves the span")]
    NotClosed { i: usize, j: usize },

    #[error("structure constants are not associative at ({i},{j},{k})")]
    NotAssociative { i: usize, j: usize, k: usize },

    #[error("element does not lie in the algebra's span")]
    NotInSpan,

    #[error("spectrum does not split over the rationals; non-split factor {factor}")]
    UnsupportedField { factor: String },

    #[error("algebra is not faithful: aA = Aa = {{0}} does not imply a = 0 here")]
    NotFaithful,

    #[error("functional is not a character: {0}")]
    NotACharacter(String),

    #[error("map fails its defining axiom: {0}")]
    InvalidMap(String),

    #[error("witness rejected: {0}")]
    InvalidWitness(String),

    #[error("relation is not reflexive and transitive: {0}")]
    NotAnAlgebra(String),

    #[error("range of {which} is not invariant under basis element {index}")]
    LatticeViolation { which: &'static str, index: usize },

    #[error("problem size exceeds the configured bound: {0}")]
    ResourceLimit(String),

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
