use crate::document::Value;
use crate::error::{Error, Result};
use crate::fpmod::{
    all_standard_monomials, coordinates, homology, k_dimension, syzygy, FPModule, KDim, ModuleMorphism, ModuleRef,
};
use crate::groebner::{FreeModuleMap, FreeVector, GroebnerBasis};
use crate::homalg::{add_m_resolution, HomModule, factor_ideal, hom_module, omega_power, post_compose, stable_hom, Verdict};
use crate::linalg::rank_of;
use crate::poly::Polynomial;

use super::hypotheses::{HypothesisCheck, NCRHypotheses};

pub(crate) fn finite(m: &FPModule) -> Result<usize> {
    match k_dimension(m) {
        KDim::Finite(n) => Ok(n),
        KDim::Infinite => Err(Error::NotFiniteLength),
    }
}

/// `End(z) / [M]` as a (non-minimal) presentation on the generators of
/// `End(z)`, plus the pieces needed to compare it with the stable quotient.
struct Quotient {
    end: HomModule,
    module: ModuleRef,
    composites: Vec<FreeVector>,
}

/// `module` with `extra` (in its generator coordinates) added as relations.
pub(crate) fn with_extra_relations(module: &FPModule, extra: &[FreeVector]) -> Result<ModuleRef> {
    let mut cols = module.relations().columns().to_vec();
    cols.extend(extra.iter().filter(|v| !v.is_zero()).cloned());
    let rel = FreeModuleMap::from_columns_infer(module.gen_degrees().to_vec(), cols)?;
    FPModule::new(module.ring(), module.gen_degrees().to_vec(), rel)
}

fn end_mod_add_m(z: &ModuleRef, m: &ModuleRef) -> Result<Quotient> {
    let fi = factor_ideal(z, m)?;
    let end = fi.end;
    let module = with_extra_relations(&end.module, &fi.composites)?;
    Ok(Quotient {
        end,
        module,
        composites: fi.composites,
    })
}

/// Rank of the map induced by `Ω^c` from `source_q` (a quotient of
/// `source.module` on the same generators) to `target_q` (likewise).
pub(crate) fn omega_image_rank(
    source: &HomModule,
    source_q: &FPModule,
    target: &HomModule,
    target_q: &FPModule,
    c: usize,
) -> Result<usize> {
    let basis = all_standard_monomials(source_q).ok_or(Error::NotFiniteLength)?;
    let target_basis = all_standard_monomials(target_q).ok_or(Error::NotFiniteLength)?;
    let mut images = Vec::with_capacity(basis.len());
    for (pos, mon) in &basis {
        let mut v = FreeVector::zero(source_q.ngens());
        v.0[*pos] = Polynomial::term(mon.clone(), 1);
        let degree = source_q.gen_degrees()[*pos] + mon.degree();
        let psi = omega_power(&source.to_morphism(&v, degree)?, c)?;
        images.push(coordinates(target_q, &target_basis, &target.from_morphism(&psi)?));
    }
    Ok(rank_of(source_q.ring().field(), target_basis.len(), &images))
}

#[derive(Clone, Debug)]
pub struct Claim1Report {
    pub hypotheses: HypothesisCheck,
    pub verdict: Verdict,
    /// `dim End(Ω^c X) / [M]`
    pub d1: usize,
    /// `dim End(X)`
    pub d2: usize,
    /// Rank of the induced map `End(X) → End(Ω^c X) / [M]`.
    pub rank: usize,
    /// `[M](Ω^c X, Ω^c X)` equals the morphisms through free modules.
    pub add_m_equals_add_r: bool,
}

impl Claim1Report {
    pub fn to_value(&self) -> Value {
        Value::map()
            .with("hypotheses", self.hypotheses.to_value())
            .with("verdict", self.verdict.to_string())
            .with("d1", self.d1)
            .with("d2", self.d2)
            .with("map_rank", self.rank)
            .with("bijection", self.rank == self.d1 && self.rank == self.d2)
            .with("add_m_equals_add_r", self.add_m_equals_add_r)
    }
}

/// Checks `End(Ω^c X)/[M] ≅ End(X)` through the syzygy functor.
pub fn verify_claim1(h: &NCRHypotheses) -> Result<Claim1Report> {
    finite(&h.x)?;
    let hyp = h.check()?;
    let m = h.m()?;
    let z = syzygy(&h.x, h.c)?;
    let q = end_mod_add_m(&z, &m)?;
    let d1 = finite(&q.module)?;

    let end_x = hom_module(&h.x, &h.x)?;
    let d2 = finite(&end_x.module)?;
    let rank = omega_image_rank(&end_x, &end_x.module, &q.end, &q.module, h.c as usize)?;
    let ring = h.x.ring();

    // [M](z, z) against the projective part, both ways
    let st = stable_hom(&z, &z)?;
    let end_rel = q.end.module.relations().columns().to_vec();
    let mut inputs = q.composites.clone();
    inputs.extend(end_rel.iter().cloned());
    let through_m = GroebnerBasis::compute(ring, q.end.module.gen_degrees(), &inputs)?;
    let add_m_equals_add_r = q.composites.iter().all(|v| st.is_stably_zero_element(v))
        && st.projective_part.iter().all(|v| through_m.contains(v));

    let evidence = d1 == d2 && rank == d2 && add_m_equals_add_r;
    let verdict = if !hyp.holds() {
        Verdict::HypothesisFailed
    } else if evidence {
        Verdict::Verified
    } else {
        return Err(Error::Falsified(format!(
            "claim 1: d1 = {d1}, d2 = {d2}, rank = {rank}, [M] = [R]: {add_m_equals_add_r}"
        )));
    };
    Ok(Claim1Report {
        hypotheses: hyp,
        verdict,
        d1,
        d2,
        rank,
        add_m_equals_add_r,
    })
}

#[derive(Clone, Debug)]
pub struct Exact2Report {
    pub hypotheses: HypothesisCheck,
    pub verdict: Verdict,
    pub depth: usize,
    pub terminated: bool,
    /// Ranks of the approximating modules `M_i` (as numbers of generators).
    pub approximation_ranks: Vec<usize>,
    /// Exactness of `Hom(Ω^c X, -)` at `M_i`, for each checked spot.
    pub exact_at: Vec<bool>,
    pub coker_dim: usize,
    pub quotient_dim: usize,
    /// `Hom̲(Ω^c X, K_i) = 0` for `i ≥ 1`.
    pub stable_vanishing: Vec<bool>,
}

impl Exact2Report {
    pub fn to_value(&self) -> Value {
        Value::map()
            .with("hypotheses", self.hypotheses.to_value())
            .with("verdict", self.verdict.to_string())
            .with("depth", self.depth)
            .with("terminated", self.terminated)
            .with("approximation_ranks", Value::list(self.approximation_ranks.iter().copied()))
            .with("exact_at", Value::list(self.exact_at.iter().copied()))
            .with("coker_dim", self.coker_dim)
            .with("quotient_dim", self.quotient_dim)
            .with("stable_vanishing", Value::list(self.stable_vanishing.iter().copied()))
    }
}

/// Applies `Hom(Ω^c X, -)` to an add-M resolution of `Ω^c X` and checks
/// exactness, the cokernel dimension, and stable vanishing on the kernels.
pub fn verify_exact2(h: &NCRHypotheses, depth: usize) -> Result<Exact2Report> {
    if depth < 1 {
        return Err(Error::InvalidArgument("depth must be at least 1".into()));
    }
    finite(&h.x)?;
    let hyp = h.check()?;
    let m = h.m()?;
    let z = syzygy(&h.x, h.c)?;
    let res = add_m_resolution(&z, &h.summands, depth)?;
    let steps = &res.steps;
    let n = steps.len();

    // f_0 = map_0, f_i = inclusion_{i-1} ∘ map_i : M_i → M_{i-1}
    let mut fs: Vec<ModuleMorphism> = Vec::with_capacity(n);
    for i in 0..n {
        if i == 0 {
            fs.push(steps[0].map.clone());
        } else {
            fs.push(steps[i - 1].inclusion.compose(&steps[i].map)?);
        }
    }
    let hz = hom_module(&z, &z)?;
    let hs: Vec<_> = steps.iter().map(|s| hom_module(&z, &s.source)).collect::<Result<_>>()?;
    let mut induced = Vec::with_capacity(n);
    for i in 0..n {
        let to = if i == 0 { &hz } else { &hs[i - 1] };
        induced.push(post_compose(&fs[i], &hs[i], to)?);
    }

    let mut exact_at = Vec::new();
    for i in 0..n {
        if i + 1 < n {
            exact_at.push(homology(&induced[i], &induced[i + 1])?.module.is_zero());
        } else if res.terminated {
            exact_at.push(induced[i].is_injective()?);
        }
    }

    let coker = induced.first().map(|g| g.cokernel()).transpose()?.unwrap_or_else(|| hz.module.clone());
    let coker_dim = finite(&coker)?;
    let quotient_dim = finite(&end_mod_add_m(&z, &m)?.module)?;
    let stable_vanishing: Vec<bool> = (1..=n)
        .map(|i| stable_hom(&z, res.k(i)).map(|s| s.is_zero()))
        .collect::<Result<_>>()?;

    let evidence = exact_at.iter().all(|&b| b) && coker_dim == quotient_dim && stable_vanishing.iter().all(|&b| b);
    let verdict = if !hyp.holds() {
        Verdict::HypothesisFailed
    } else if !evidence {
        return Err(Error::Falsified(format!(
            "exactness: exact_at = {exact_at:?}, coker {coker_dim} vs quotient {quotient_dim}, stable vanishing {stable_vanishing:?}"
        )));
    } else if !res.terminated {
        Verdict::DepthExhausted
    } else {
        Verdict::Verified
    };
    Ok(Exact2Report {
        hypotheses: hyp,
        verdict,
        depth,
        terminated: res.terminated,
        approximation_ranks: steps.iter().map(|s| s.source.ngens()).collect(),
        exact_at,
        coker_dim,
        quotient_dim,
        stable_vanishing,
    })
}
