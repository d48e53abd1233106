use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::document::Value;
use crate::error::Result;
use crate::fpmod::{direct_sum, syzygy, syzygy_sequence, FPModule, ModuleMorphism, ModuleRef};
use crate::groebner::FreeModuleMap;
use crate::homalg::{check_lift_exactness, stable_hom, ShortExact, Verdict};
use crate::ring::RingRef;

use super::claims::{omega_image_rank, with_extra_relations};

/// `Hom̲(Ω^c k, Ω^{c+n} k) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vanishing {
    pub c: i32,
    pub n: i32,
    pub vanishes: bool,
}

/// `Ω^c: Hom̲(k, k) → Hom̲(Ω^c k, Ω^c k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaBijection {
    pub c: i32,
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
}

impl OmegaBijection {
    pub fn bijective(&self) -> bool {
        self.rank == self.source_dim && self.rank == self.target_dim
    }
}

/// One short exact sequence tested against one `w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftCase {
    pub sequence: String,
    pub w: String,
    pub hypothesis: bool,
    pub left_exact: bool,
    pub right_exact: bool,
}

#[derive(Clone, Debug)]
pub struct LemmasReport {
    pub r: usize,
    pub seed: u64,
    pub vanishing: Vec<Vanishing>,
    pub bijections: Vec<OmegaBijection>,
    pub lift_cases: Vec<LiftCase>,
    /// Sampled pairs discarded because the stable Hom hypothesis failed.
    pub rejected: usize,
    pub verdict: Verdict,
}

impl LemmasReport {
    pub fn to_value(&self) -> Value {
        let vanishing = self.vanishing.iter().map(|v| {
            Value::map().with("c", v.c).with("n", v.n).with("vanishes", v.vanishes)
        });
        let bijections = self.bijections.iter().map(|b| {
            Value::map()
                .with("c", b.c)
                .with("source_dim", b.source_dim)
                .with("target_dim", b.target_dim)
                .with("rank", b.rank)
                .with("bijective", b.bijective())
        });
        let lifts = self.lift_cases.iter().map(|l| {
            Value::map()
                .with("sequence", l.sequence.as_str())
                .with("w", l.w.as_str())
                .with("hypothesis", l.hypothesis)
                .with("left_exact", l.left_exact)
                .with("right_exact", l.right_exact)
        });
        Value::map()
            .with("r", self.r)
            .with("seed", self.seed)
            .with("stable_vanishing", Value::List(vanishing.collect()))
            .with("omega_bijections", Value::List(bijections.collect()))
            .with("lift_cases", Value::List(lifts.collect()))
            .with("rejected", self.rejected)
            .with("verdict", self.verdict.to_string())
    }
}

/// Every `(c, n)` with `0 ≤ c < r`, `n ≥ 1`, `c + n ≤ r`.
pub fn stable_vanishing_sweep(ring: &RingRef) -> Result<Vec<Vanishing>> {
    let r = ring.nvars() as i32;
    let k = FPModule::residue_field(ring);
    let pairs: Vec<(i32, i32)> = (0..r).flat_map(|c| (1..=r - c).map(move |n| (c, n))).collect();
    pairs
        .par_iter()
        .map(|&(c, n)| {
            let a = syzygy(&k, c)?;
            let b = syzygy(&k, c + n)?;
            Ok(Vanishing {
                c,
                n,
                vanishes: stable_hom(&a, &b)?.is_zero(),
            })
        })
        .collect()
}

/// The map induced by `Ω^c` on stable endomorphisms of `k`, for `c < r`.
pub fn omega_bijections(ring: &RingRef) -> Result<Vec<OmegaBijection>> {
    let k = FPModule::residue_field(ring);
    let source = stable_hom(&k, &k)?;
    let source_q = with_extra_relations(&source.total.module, &source.projective_part)?;
    let source_dim = super::claims::finite(&source_q)?;
    (0..ring.nvars() as i32)
        .into_par_iter()
        .map(|c| {
            let z = syzygy(&k, c)?;
            let target = stable_hom(&z, &z)?;
            let target_q = with_extra_relations(&target.total.module, &target.projective_part)?;
            Ok(OmegaBijection {
                c,
                source_dim,
                target_dim: super::claims::finite(&target_q)?,
                rank: omega_image_rank(&source.total, &source_q, &target.total, &target_q, c as usize)?,
            })
        })
        .collect()
}

/// `k`, `R/m²`, `m` and `Ω²k`.
pub fn lemma_family(ring: &RingRef) -> Result<Vec<(String, ModuleRef)>> {
    let k = FPModule::residue_field(ring);
    Ok(vec![
        ("k".into(), k.clone()),
        ("R/m^2".into(), FPModule::power_of_maximal_quotient(ring, 2)),
        ("m".into(), syzygy(&k, 1)?),
        ("Ω^2 k".into(), syzygy(&k, 2)?),
    ])
}

fn test_modules(ring: &RingRef) -> Result<Vec<(String, ModuleRef)>> {
    let k = FPModule::residue_field(ring);
    let mut out = vec![
        ("R".to_string(), FPModule::free(ring, &[0])),
        ("R(-1)".to_string(), FPModule::free(ring, &[1])),
        ("k".to_string(), k.clone()),
    ];
    for a in 1..ring.nvars() as i32 {
        out.push((format!("Ω^{a} k"), syzygy(&k, a)?));
    }
    Ok(out)
}

fn sum_of_maps(maps: &[ModuleMorphism]) -> Result<ModuleMorphism> {
    if maps.len() == 1 {
        return Ok(maps[0].clone());
    }
    let sources: Vec<ModuleRef> = maps.iter().map(|f| f.source().clone()).collect();
    let targets: Vec<ModuleRef> = maps.iter().map(|f| f.target().clone()).collect();
    let blocks: Vec<&FreeModuleMap> = maps.iter().map(|f| f.matrix()).collect();
    ModuleMorphism::new(
        &direct_sum(&sources)?.module,
        &direct_sum(&targets)?.module,
        FreeModuleMap::block_diagonal(&blocks),
        0,
    )
}

struct Candidate {
    parts: Vec<(usize, i32)>,
    w: usize,
}

/// Samples direct sums of one or two syzygy sequences `0 → Ω^{c+1}X → F_c →
/// Ω^c X → 0` with `X` in [`lemma_family`], paired with a test module `w`,
/// and checks `Hom(w, -)` exactness on the first `count` distinct pairs
/// satisfying `Hom̲(w, Ω^c X) = 0`.
pub fn lift_harness(ring: &RingRef, seed: u64, count: usize) -> Result<(Vec<LiftCase>, usize)> {
    let family = lemma_family(ring)?;
    let tests = test_modules(ring)?;
    let r = ring.nvars() as i32;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = BTreeSet::new();
    let mut candidates = Vec::new();
    for _ in 0..40 * count.max(1) {
        let nparts = rng.gen_range(1..=2);
        let mut parts: Vec<(usize, i32)> = (0..nparts)
            .map(|_| (rng.gen_range(0..family.len()), rng.gen_range(0..r)))
            .collect();
        parts.sort_unstable();
        let w = rng.gen_range(0..tests.len());
        if seen.insert((parts.clone(), w)) {
            candidates.push(Candidate { parts, w });
        }
    }

    let evaluate = |cand: &Candidate| -> Result<Option<LiftCase>> {
        let mut incs = Vec::new();
        let mut projs = Vec::new();
        let mut labels = Vec::new();
        for &(x, c) in &cand.parts {
            let (i, p) = syzygy_sequence(&family[x].1, c)?;
            if p.target().is_zero() {
                return Ok(None);
            }
            incs.push(i);
            projs.push(p);
            labels.push(format!("syz_{c}({})", family[x].0));
        }
        let ses = ShortExact::new(sum_of_maps(&incs)?, sum_of_maps(&projs)?)?;
        let rep = check_lift_exactness(&ses, &tests[cand.w].1)?;
        Ok(Some(LiftCase {
            sequence: labels.join(" ⊕ "),
            w: tests[cand.w].0.clone(),
            hypothesis: rep.hypothesis,
            left_exact: rep.left_exact,
            right_exact: rep.right_exact,
        }))
    };

    // evaluated in parallel batches, consumed in sampling order
    let mut cases = Vec::new();
    let mut rejected = 0;
    for batch in candidates.chunks(2 * count.max(1)) {
        let results: Vec<Option<LiftCase>> = batch.par_iter().map(evaluate).collect::<Result<_>>()?;
        for case in results.into_iter().flatten() {
            if cases.len() == count {
                break;
            }
            if case.hypothesis {
                cases.push(case);
            } else {
                rejected += 1;
            }
        }
        if cases.len() == count {
            break;
        }
    }
    Ok((cases, rejected))
}

/// Both lemmas on the built-in family over `ring`.
pub fn verify_lemmas(ring: &RingRef, seed: u64, lift_count: usize) -> Result<LemmasReport> {
    let vanishing = stable_vanishing_sweep(ring)?;
    let bijections = omega_bijections(ring)?;
    let (lift_cases, rejected) = lift_harness(ring, seed, lift_count)?;
    let all_hold = vanishing.iter().all(|v| v.vanishes)
        && bijections.iter().all(|b| b.bijective())
        && lift_cases.iter().all(|l| l.left_exact && l.right_exact);
    if !all_hold {
        return Err(crate::Error::Falsified("a lemma check failed on the built-in family".into()));
    }
    let verdict = if lift_cases.len() < lift_count {
        Verdict::DepthExhausted
    } else {
        Verdict::Verified
    };
    Ok(LemmasReport {
        r: ring.nvars(),
        seed,
        vanishing,
        bijections,
        lift_cases,
        rejected,
        verdict,
    })
}
