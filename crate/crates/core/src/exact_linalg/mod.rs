//! Exact dense linear algebra over ℚ and ℚ(i).

mod eigen;
mod gaussian;
mod matrix;
mod scalar;
mod subspace;

pub use eigen::{
    imaginary_integer_candidates, is_eigenvector, simultaneous_eigenspaces, Eigenspace,
};
pub use gaussian::GaussianScalar;
pub use matrix::{echelon_basis, Matrix, MatrixQ, MatrixQi};
pub use scalar::{
    checked_div, frac, is_positive, parse_rational, q, render_rational, ExactScalar, Field,
};
pub use subspace::{combine, express_in_basis, Membership, Subspace};
