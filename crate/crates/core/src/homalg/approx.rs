use crate::error::{Error, Result};
use crate::fpmod::{direct_sum, kernel, ModuleMorphism, ModuleRef, Submodule};
use crate::groebner::{FreeVector, GroebnerBasis};

use super::duality::is_generator;
use super::hom::{hom_module, HomModule};

/// One step `⊕ M_{b_k}(-δ_k) → K_i` of an add-M resolution, with its kernel.
#[derive(Debug)]
pub struct ApproxStep {
    /// `(summand index, twist)` for each component of the source.
    pub components: Vec<(usize, i32)>,
    pub source: ModuleRef,
    /// The approximation `source → K_i` (surjective).
    pub map: ModuleMorphism,
    /// `K_{i+1}` with generators given in `source` coordinates.
    pub kernel: Submodule,
    /// Inclusion `K_{i+1} → source`.
    pub inclusion: ModuleMorphism,
}

#[derive(Debug)]
pub struct AddMResolution {
    pub target: ModuleRef,
    pub steps: Vec<ApproxStep>,
    /// Some kernel vanished within the requested depth.
    pub terminated: bool,
}

impl AddMResolution {
    /// `K_i` (`K_0` is the resolved module).
    pub fn k(&self, i: usize) -> &ModuleRef {
        if i == 0 {
            &self.target
        } else {
            &self.steps[i - 1].kernel.module
        }
    }
}

/// Chooses homogeneous generators of `Hom(M_b, k)` over all summands `b`
/// that are not composites `ψ ∘ h` of already chosen ones, then drops any
/// that became redundant.
fn irredundant(summands: &[ModuleRef], homs: &[HomModule], between: &[Vec<HomModule>]) -> Result<Vec<(usize, usize)>> {
    let candidates: Vec<(usize, usize)> = homs
        .iter()
        .enumerate()
        .flat_map(|(b, h)| (0..h.ngens()).map(move |g| (b, g)))
        .collect();

    // coordinates of ψ ∘ h in Hom(M_b, k) for every chosen ψ: M_a → k
    let spans = |chosen: &[(usize, usize)], b: usize, skip: Option<usize>| -> Result<Vec<FreeVector>> {
        let mut out = Vec::new();
        for (n, &(a, g)) in chosen.iter().enumerate() {
            if Some(n) == skip {
                continue;
            }
            let psi = &homs[a].generators[g];
            for h in &between[b][a].generators {
                out.push(homs[b].from_morphism(&psi.compose(h)?)?);
            }
        }
        Ok(out)
    };
    let is_redundant = |chosen: &[(usize, usize)], b: usize, g: usize, skip: Option<usize>| -> Result<bool> {
        let hb = &homs[b];
        let mut inputs = spans(chosen, b, skip)?;
        inputs.extend(hb.module.relations().columns().iter().cloned());
        let gb = GroebnerBasis::compute(summands[b].ring(), hb.module.gen_degrees(), &inputs)?;
        Ok(gb.contains(&FreeVector::unit(summands[b].ring(), hb.ngens(), g)))
    };

    let mut order = candidates;
    order.sort_by_key(|&(b, g)| (homs[b].module.gen_degrees()[g], b, g));
    let mut chosen: Vec<(usize, usize)> = Vec::new();
    for (b, g) in order {
        if !is_redundant(&chosen, b, g, None)? {
            chosen.push((b, g));
        }
    }
    let mut n = chosen.len();
    while n > 0 {
        n -= 1;
        let (b, g) = chosen[n];
        if is_redundant(&chosen, b, g, Some(n))? {
            chosen.remove(n);
        }
    }
    Ok(chosen)
}

/// Iterated right add-M approximations of `z`, where `M` is the direct sum
/// of `summands`, up to `depth` steps.
pub fn add_m_resolution(z: &ModuleRef, summands: &[ModuleRef], depth: usize) -> Result<AddMResolution> {
    if summands.is_empty() {
        return Err(Error::InvalidArgument("add-M resolution needs at least one summand".into()));
    }
    let m = direct_sum(summands)?.module;
    if is_generator(&m)?.is_none() {
        return Err(Error::InvalidArgument("M is not a generator".into()));
    }
    let between: Vec<Vec<HomModule>> = summands
        .iter()
        .map(|b| summands.iter().map(|a| hom_module(b, a)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;

    let mut steps = Vec::new();
    let mut current = z.clone();
    let mut terminated = current.is_zero();
    for _ in 0..depth {
        if terminated {
            break;
        }
        let homs: Vec<HomModule> = summands.iter().map(|b| hom_module(b, &current)).collect::<Result<_>>()?;
        let chosen = irredundant(summands, &homs, &between)?;
        let components: Vec<(usize, i32)> = chosen.iter().map(|&(b, g)| (b, homs[b].module.gen_degrees()[g])).collect();
        let parts: Vec<ModuleRef> = components.iter().map(|&(b, d)| summands[b].twist(d)).collect();
        let source = direct_sum(&parts)?.module;
        let cols: Vec<FreeVector> = chosen
            .iter()
            .flat_map(|&(b, g)| homs[b].generators[g].matrix().columns().to_vec())
            .collect();
        let map = ModuleMorphism::from_columns(&source, &current, cols, 0)?;
        if !map.is_surjective()? {
            return Err(Error::Internal("add-M approximation is not surjective".into()));
        }
        let ker = kernel(&map)?;
        let inclusion = ker.inclusion(&source)?;
        current = ker.module.clone();
        terminated = current.is_zero();
        steps.push(ApproxStep {
            components,
            source,
            map,
            kernel: ker,
            inclusion,
        });
    }
    Ok(AddMResolution {
        target: z.clone(),
        steps,
        terminated,
    })
}
