//! Hom, Ext, transposes, stable Hom and add-M approximations.
//!
//! Any morphism `w → z` that factors through some free module factors
//! through the generator cover `F ↠ z`, since a free module maps to `z`
//! only through `F`. The projective part of `Hom(w, z)` is therefore the
//! image of `Hom(w, F)`.

mod approx;
mod duality;
mod hom;
mod stable;

pub use approx::{add_m_resolution, AddMResolution, ApproxStep};
pub use duality::{grade, is_d_torsionfree, is_generator, transpose, transpose_of_presentation, SplitPair};
pub use hom::{ext, hom_free, hom_free_map, hom_module, post_compose, pre_compose, ring_module, HomModule};
pub use stable::{
    check_lift_exactness, doubled_cover, factor_ideal, free_cover, omega_on_morphism, omega_power, stable_hom,
    stable_hom_with_cover, FactorIdeal, LiftReport, ShortExact, StableHom, Verdict,
};
