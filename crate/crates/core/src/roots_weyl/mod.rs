//! Root decomposition of `sp(2n, ℂ)` under the compact torus of a special functional, root
//! classification, positive systems and the Weyl group.

mod decomposition;
mod weyl;

pub use decomposition::{
    analyze, choose_positive_system, classify_all, classify_root, half_sums, weight_decomposition,
    Compactness, HalfSums, PositiveRule, RootDatum, RootSystemReport, SlTriple, TorusData,
};
pub use weyl::{generate_weyl_group, reflection_matrix, weyl_reflection, WeylGroup};
