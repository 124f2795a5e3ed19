use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unbounded")]
    Unbounded,
    #[error("polyhedron has a lineality space")]
    NotPointed,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("point is not in the polytope")]
    PointOutside,
    #[error("not a parapolytope at c: {0}")]
    NotParapolytope(String),
    #[error("not reduced")]
    NotReduced,
    #[error("invalid box: {0}")]
    InvalidBox(String),
    #[error("non-exact division by (1 - t)")]
    InexactDivision,
    #[error("{0} is not dominant")]
    NotDominant(String),
    #[error("word {0:?} is not reduced")]
    NotReducedWord(Vec<usize>),
    #[error("no compatible subword")]
    NoCompatibleSubword,
    #[error("zero polynomial has no valuation")]
    ZeroPolynomial,
    #[error("invalid label: {0}")]
    InvalidLabel(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
