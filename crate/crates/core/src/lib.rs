pub mod error;
pub mod exact_linalg;
pub mod orbits;
pub mod polarizations;
pub mod report;
pub mod roots_weyl;
pub mod symplectic_lie;

pub use error::{Error, Result};
