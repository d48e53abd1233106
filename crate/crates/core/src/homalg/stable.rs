use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::fpmod::{subquotient, syzygy, FPModule, ModuleMorphism, ModuleRef, Submodule};
use crate::groebner::{lift_solve, FreeVector, GroebnerBasis};

use super::hom::{hom_module, post_compose, HomModule};

/// Outcome of a mechanical check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    Verified,
    HypothesisFailed,
    DepthExhausted,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Verified => "verified",
            Verdict::HypothesisFailed => "hypothesis-failed",
            Verdict::DepthExhausted => "depth-exhausted",
        })
    }
}

impl FromStr for Verdict {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "verified" => Ok(Verdict::Verified),
            "hypothesis-failed" => Ok(Verdict::HypothesisFailed),
            "depth-exhausted" => Ok(Verdict::DepthExhausted),
            _ => Err(Error::Parse(format!("unknown verdict {s:?}"))),
        }
    }
}

/// `Hom(w, z)` modulo the morphisms that factor through a free module.
#[derive(Debug)]
pub struct StableHom {
    pub total: HomModule,
    /// Coordinates (on `total.module`) of generators of the projective part.
    pub projective_part: Vec<FreeVector>,
    /// The quotient, presented on a subset of the generators of `total.module`.
    pub quotient: Submodule,
    zero_test: GroebnerBasis,
}

impl StableHom {
    /// Does `f: w → z` factor through a free module?
    pub fn is_stably_zero(&self, f: &ModuleMorphism) -> Result<bool> {
        Ok(self.zero_test.contains(&self.total.from_morphism(f)?))
    }

    /// Same test for an element given in Hom coordinates.
    pub fn is_stably_zero_element(&self, v: &FreeVector) -> bool {
        self.zero_test.contains(v)
    }

    pub fn is_zero(&self) -> bool {
        self.quotient.module.is_zero()
    }
}

fn generator_cover(z: &ModuleRef) -> Result<ModuleMorphism> {
    let ring = z.ring();
    let free = FPModule::free(ring, z.gen_degrees());
    let n = z.ngens();
    ModuleMorphism::from_columns(&free, z, (0..n).map(|k| FreeVector::unit(ring, n, k)).collect(), 0)
}

/// Doubled cover `F ⊕ F ↠ z`, used to check cover independence.
pub fn doubled_cover(z: &ModuleRef) -> Result<ModuleMorphism> {
    let ring = z.ring();
    let mut degs = z.gen_degrees().to_vec();
    degs.extend_from_slice(z.gen_degrees());
    let free = FPModule::free(ring, &degs);
    let n = z.ngens();
    let cols = (0..2 * n).map(|k| FreeVector::unit(ring, n, k % n)).collect();
    ModuleMorphism::from_columns(&free, z, cols, 0)
}

pub fn stable_hom(w: &ModuleRef, z: &ModuleRef) -> Result<StableHom> {
    stable_hom_with_cover(w, z, &generator_cover(z)?)
}

/// Stable Hom using the surjection `cover: F ↠ z` from a free module.
pub fn stable_hom_with_cover(w: &ModuleRef, z: &ModuleRef, cover: &ModuleMorphism) -> Result<StableHom> {
    if !cover.source().is_free_presentation() || !cover.target().same_presentation(z) {
        return Err(Error::InvalidArgument("cover must be a map from a free module onto z".into()));
    }
    let ring = z.ring();
    let total = hom_module(w, z)?;
    let through = hom_module(w, cover.source())?;
    let pi = post_compose(cover, &through, &total)?;
    let projective_part: Vec<FreeVector> = pi.matrix().columns().iter().filter(|v| !v.is_zero()).cloned().collect();
    let k = total.module.ngens();
    let units: Vec<FreeVector> = (0..k).map(|i| FreeVector::unit(ring, k, i)).collect();
    let quotient = subquotient(&total.module, &units, &projective_part)?;
    let mut inputs = projective_part.clone();
    inputs.extend(total.module.relations().columns().iter().cloned());
    let zero_test = GroebnerBasis::compute(ring, total.module.gen_degrees(), &inputs)?;
    Ok(StableHom {
        total,
        projective_part,
        quotient,
        zero_test,
    })
}

/// The ideal `[m](z, z)` of endomorphisms of `z` factoring through `add m`.
#[derive(Debug)]
pub struct FactorIdeal {
    pub end: HomModule,
    /// Coordinates (on `end.module`) of the composites `g ∘ f`.
    pub composites: Vec<FreeVector>,
    pub ideal: Submodule,
    /// `End(z) / [m]`.
    pub quotient: Submodule,
}

pub fn factor_ideal(z: &ModuleRef, m: &ModuleRef) -> Result<FactorIdeal> {
    let ring = z.ring();
    let end = hom_module(z, z)?;
    let to = hom_module(z, m)?;
    let from = hom_module(m, z)?;
    let mut composites = Vec::new();
    for g in &from.generators {
        for f in &to.generators {
            let v = end.from_morphism(&g.compose(f)?)?;
            if !v.is_zero() {
                composites.push(v);
            }
        }
    }
    let ideal = subquotient(&end.module, &composites, &[])?;
    let k = end.module.ngens();
    let units: Vec<FreeVector> = (0..k).map(|i| FreeVector::unit(ring, k, i)).collect();
    let quotient = subquotient(&end.module, &units, &composites)?;
    Ok(FactorIdeal {
        end,
        composites,
        ideal,
        quotient,
    })
}

/// The induced map `Ω¹x → Ω¹y` of a chain lift of `phi: x → y` through the
/// minimal resolutions.
pub fn omega_on_morphism(phi: &ModuleMorphism) -> Result<ModuleMorphism> {
    let x = phi.source();
    let y = phi.target();
    let ring = x.ring();
    let mx = x.minimalization();
    let my = y.minimalization();
    let p = my.to_min.compose(phi)?.compose(&mx.from_min)?;
    let ox = syzygy(x, 1)?;
    let oy = syzygy(y, 1)?;
    let ax = mx.module.relations();
    let ay = my.module.relations();
    let delta = phi.degree();
    let src: Vec<i32> = ax.source_degrees().iter().map(|d| d + delta).collect();
    if ox.ngens() == 0 || oy.ngens() == 0 {
        return Ok(ModuleMorphism::zero(&ox, &oy, delta));
    }
    let pa = p.matrix().compose_shifted(ring, ax, src);
    let psi = lift_solve(ring, ay, &pa)?
        .ok_or_else(|| Error::Internal("chain lift failed through a free cover".into()))?;
    ModuleMorphism::new(&ox, &oy, psi, delta)
}

/// `Ω^c phi`, iterating [`omega_on_morphism`].
pub fn omega_power(phi: &ModuleMorphism, c: usize) -> Result<ModuleMorphism> {
    let mut f = phi.clone();
    if c == 0 {
        let mx = phi.source().minimalization();
        let my = phi.target().minimalization();
        return my.to_min.compose(phi)?.compose(&mx.from_min);
    }
    for _ in 0..c {
        f = omega_on_morphism(&f)?;
    }
    Ok(f)
}

/// A short exact sequence `0 → x --i--> y --p--> z → 0`.
#[derive(Clone, Debug)]
pub struct ShortExact {
    pub i: ModuleMorphism,
    pub p: ModuleMorphism,
}

impl ShortExact {
    /// Validates injectivity, surjectivity and exactness in the middle.
    pub fn new(i: ModuleMorphism, p: ModuleMorphism) -> Result<Self> {
        if !i.target().same_presentation(p.source()) {
            return Err(Error::NotExact("maps are not composable".into()));
        }
        if !p.compose(&i)?.is_zero() {
            return Err(Error::NotExact("p ∘ i ≠ 0".into()));
        }
        if !i.is_injective()? {
            return Err(Error::NotExact("i is not injective".into()));
        }
        if !p.is_surjective()? {
            return Err(Error::NotExact("p is not surjective".into()));
        }
        let y = i.target();
        let mut inputs = i.matrix().columns().to_vec();
        inputs.extend(y.relations().columns().iter().cloned());
        let im = GroebnerBasis::compute(y.ring(), y.gen_degrees(), &inputs)?;
        if !p.kernel()?.generators.iter().all(|v| im.contains(v)) {
            return Err(Error::NotExact("kernel of p exceeds image of i".into()));
        }
        Ok(ShortExact { i, p })
    }
}

/// Result of testing whether `Hom(w, -)` keeps a short exact sequence exact.
#[derive(Debug)]
pub struct LiftReport {
    /// `Hom̲(w, z) = 0`
    pub hypothesis: bool,
    pub left_exact: bool,
    pub right_exact: bool,
    pub verdict: Verdict,
    /// A morphism `w → z` with no preimage, when right exactness fails.
    pub obstruction: Option<ModuleMorphism>,
}

pub fn check_lift_exactness(ses: &ShortExact, w: &ModuleRef) -> Result<LiftReport> {
    let (i, p) = (&ses.i, &ses.p);
    let hx = hom_module(w, i.source())?;
    let hy = hom_module(w, i.target())?;
    let hz = hom_module(w, p.target())?;
    let ix = post_compose(i, &hx, &hy)?;
    let py = post_compose(p, &hy, &hz)?;
    let left_exact = ix.is_injective()? && crate::fpmod::homology(&py, &ix)?.module.is_zero();

    let mut inputs = py.matrix().columns().to_vec();
    inputs.extend(hz.module.relations().columns().iter().cloned());
    let img = GroebnerBasis::compute(w.ring(), hz.module.gen_degrees(), &inputs)?;
    let k = hz.module.ngens();
    let missing = (0..k).find(|&j| !img.contains(&FreeVector::unit(w.ring(), k, j)));
    let right_exact = missing.is_none();
    let hypothesis = stable_hom(w, p.target())?.is_zero();

    if !left_exact {
        return Err(Error::Internal("Hom(w, -) failed to be left exact".into()));
    }
    if hypothesis && !right_exact {
        let j = missing.unwrap();
        return Err(Error::Falsified(format!(
            "stable Hom(w, z) vanishes but generator {j} of Hom(w, z) does not lift"
        )));
    }
    let verdict = if hypothesis { Verdict::Verified } else { Verdict::HypothesisFailed };
    Ok(LiftReport {
        hypothesis,
        left_exact,
        right_exact,
        verdict,
        obstruction: missing.map(|j| hz.generators[j].clone()),
    })
}

/// The projection `F_0 ↠ m` from the free module on the generators of `m`.
pub fn free_cover(m: &ModuleRef) -> Result<ModuleMorphism> {
    generator_cover(m)
}
