//! Finitely presented graded modules over a polynomial ring.

mod dimension;
mod module;
mod morphism;
mod resolution;

pub use dimension::{all_standard_monomials, coordinates, hilbert_function, hilbert_range, k_dimension, standard_basis, KDim};
pub use module::{direct_sum, DirectSum, FPModule, ModuleRef};
pub use morphism::{cokernel, homology, image, kernel, subquotient, ModuleMorphism, Submodule};
pub use resolution::{minimal_resolution, syzygy, syzygy_sequence, FreeResolution, Minimalization};
