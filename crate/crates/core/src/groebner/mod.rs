//! Gröbner bases for graded submodules of free modules, normal forms,
//! Schreyer syzygies and lifting.

mod buchberger;
mod matrix;
mod order;
mod syzygy;
mod vector;

pub use buchberger::{buchberger, normal_form, GbBuilder, GroebnerBasis};
pub use matrix::FreeModuleMap;
pub use order::{SchreyerFrame, TermOrder};
pub use syzygy::{lift_solve, lift_with, minimal_generators, schreyer_syzygies, syzygy_basis};
pub use vector::FreeVector;
