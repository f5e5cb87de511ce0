//! Parabolic polarizations, their Langlands pieces, maximal parabolic elements and the
//! restriction of a special functional to the radical of its stabilizer.

mod langlands;
mod parabolic;
mod polarization;
mod radical;

pub use langlands::{
    embed_trailing_block, langlands_pieces, torus_centralizer, LanglandsPieces, LanglandsVerdicts,
};
pub use parabolic::{
    in_parabolic_block_pattern, maximal_parabolic_element, maximal_parabolic_form,
    random_maximal_parabolic, uabw_to_block, MaximalParabolicForm,
};
pub use polarization::{
    build_polarization, verify_polarization, PolarizationMode, PolarizationSubalgebra,
    PolarizationVerdicts, CLOSEDNESS_NOTE,
};
pub use radical::{restriction_to_radical, RadicalRestriction};
