//! `sp(2n, ℝ)`, its dual, and rational points of `Sp(2n, ℝ)`.

mod algebra;
mod functional;
mod group;

pub use algebra::{build_sp_algebra, SpAlgebra, SymplecticForm};
pub use functional::{build_special_f, random_lambdas, trace_pairing, Functional};
pub use group::{
    adjoint, coadjoint, pythagorean_point, random_stabilizer_element, random_symplectic,
    rotation_block, stabilizer_element, GroupElement,
};
