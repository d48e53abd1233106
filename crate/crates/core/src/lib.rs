//! Exact graded homological algebra over `F_p[x_1..x_r]` and the syzygy
//! construction of noncommutative resolutions `End_R(R ⊕ Ω^{c_1}N ⊕ ...)`.
//!
//! Layers, bottom up: [`field`], [`poly`] and [`ring`] for arithmetic;
//! [`groebner`] for submodules of free modules; [`fpmod`] for finitely
//! presented graded modules and resolutions; [`homalg`] for Hom, Ext,
//! transposes and stable categories; [`ncr`] for the resolution
//! construction and its certificates; [`cli`] for batch jobs.

pub mod cli;
pub mod document;
pub mod error;
pub mod field;
pub mod fpmod;
pub mod groebner;
pub mod homalg;
pub mod linalg;
pub mod monomial;
pub mod ncr;
pub mod poly;
pub mod ring;

pub use error::{Error, Result};
pub use field::{Coeff, PrimeField};
pub use monomial::Monomial;
pub use poly::Polynomial;
pub use ring::{ModuleOrder, MonomialOrder, Ring, RingRef};
