use crate::error::{Error, Result};
use crate::fpmod::{FPModule, ModuleMorphism, ModuleRef};
use crate::groebner::FreeVector;

use super::hom::{evaluations, ext, hom_module, ring_module};

/// Auslander transpose: `coker(F_0* → F_1*)` for the minimal presentation
/// `F_1 → F_0 → m → 0`.
pub fn transpose(m: &ModuleRef) -> Result<ModuleRef> {
    transpose_of_presentation(&m.minimal_presentation())
}

/// Transpose computed from the given (possibly non-minimal) presentation.
pub fn transpose_of_presentation(m: &ModuleRef) -> Result<ModuleRef> {
    let d = m.relations().dual();
    let nz: Vec<usize> = (0..d.ncols()).filter(|&j| !d.column(j).is_zero()).collect();
    FPModule::new(m.ring(), d.target_degrees().to_vec(), d.select_columns(&nz))
}

/// Least `n` with `Ext^n(m, R) ≠ 0`; `None` (infinite) iff `m = 0`.
pub fn grade(m: &ModuleRef, max_search: usize) -> Result<Option<usize>> {
    if m.is_zero() {
        return Ok(None);
    }
    let r = ring_module(m);
    for n in 0..=max_search {
        if !ext(n as i32, m, &r)?.is_zero() {
            return Ok(Some(n));
        }
    }
    if max_search >= m.ring().nvars() {
        return Err(Error::Internal(format!("nonzero module with all Ext^0..{max_search}(-, R) zero")));
    }
    Err(Error::InvalidArgument(format!(
        "grade search bound {max_search} below the number of variables"
    )))
}

/// `Ext^i(Tr m, R) = 0` for `1 ≤ i ≤ d`.
pub fn is_d_torsionfree(m: &ModuleRef, d: i32) -> Result<bool> {
    let tr = transpose(m)?;
    let r = ring_module(m);
    for i in 1..=d {
        if !ext(i, &tr, &r)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Witness that a twist of the ring is a direct summand: `f ∘ g = id`.
#[derive(Debug, Clone)]
pub struct SplitPair {
    /// `R(-s)`
    pub free: ModuleRef,
    pub f: ModuleMorphism,
    pub g: ModuleMorphism,
}

/// Whether the trace ideal of `m` is the unit ideal; when it is, returns a
/// split pair through a twist of `R`.
pub fn is_generator(m: &ModuleRef) -> Result<Option<SplitPair>> {
    let ring = m.ring();
    let f = ring.field();
    let dual = hom_module(m, &ring_module(m))?;
    for j in 0..m.ngens() {
        for (k, e) in evaluations(&dual, j).into_iter().enumerate() {
            if e.is_zero() || !e.is_constant() {
                continue;
            }
            let s = m.gen_degrees()[j];
            let free = FPModule::free(ring, &[s]);
            let inv = crate::poly::Polynomial::constant(ring, f.inv(e.constant_term()) as i64);
            let phi = &dual.generators[k];
            let cols: Vec<FreeVector> = phi
                .matrix()
                .columns()
                .iter()
                .map(|c| c.mul_poly(ring, &inv))
                .collect();
            let fm = ModuleMorphism::from_columns(m, &free, cols, 0)?;
            let g = ModuleMorphism::from_columns(&free, m, vec![FreeVector::unit(ring, m.ngens(), j)], 0)?;
            debug_assert!(fm.compose(&g)?.equals(&ModuleMorphism::identity(&free)));
            return Ok(Some(SplitPair { free, f: fm, g }));
        }
    }
    Ok(None)
}
