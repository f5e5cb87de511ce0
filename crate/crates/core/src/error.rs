use thiserror::Error;

/// Errors raised by the exact computations in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("matrix is singular")]
    Singular,

    #[error("operators {0} and {1} do not commute")]
    NonCommuting(usize, usize),

    #[error("operator {0} has an eigenvalue outside the candidate set over Q(i)")]
    NonSplit(usize),

    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),

    #[error("matrix is not symplectic")]
    NotSymplectic,

    #[error("element is not in sp(2n): {0}")]
    NotInAlgebra(String),

    #[error("({0}, {1}) is not a point on the unit circle")]
    NotOnCircle(String, String),

    #[error("root space has multiplicity {0}; only multiplicity-1 roots are classified")]
    MultiplicityTooHigh(usize),

    #[error("{0} positive root(s) are unclassified")]
    UnclassifiedRoots(usize),

    #[error("no positive system has been chosen")]
    PositiveSystemUnset,

    #[error("reflection in the zero vector")]
    ZeroRoot,

    #[error("Weyl group closure needs a full-rank torus (r = {r}, n = {n})")]
    NotFullRank { n: usize, r: usize },

    #[error("functional has no special block parameters")]
    NotSpecial,

    #[error("flatness violated: {0}")]
    FlatnessViolation(String),

    #[error("root triple could not be normalized: {0}")]
    BadTriple(String),
}

pub type Result<T> = std::result::Result<T, Error>;
