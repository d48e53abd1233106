//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails or exceeds its time budget.

mod common;

use std::time::{Duration, Instant};

use common::*;
use syzygy_ncr::fpmod::{minimal_resolution, syzygy, FPModule, ModuleRef};
use syzygy_ncr::homalg::{grade, is_d_torsionfree, Verdict};
use syzygy_ncr::ncr::{
    corollary_build, lift_harness, omega_bijections, stable_vanishing_sweep, verify_claim1, verify_exact2,
    NCRHypotheses,
};
use syzygy_ncr::{Polynomial, Ring, RingRef};

const BUDGET: Duration = Duration::from_secs(60);

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ring(n: usize) -> RingRef {
    Ring::standard_in(n)
}

fn k(r: &RingRef) -> ModuleRef {
    FPModule::residue_field(r)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e(err: syzygy_ncr::Error) -> String {
    err.to_string()
}

fn koszul_oracle() -> Outcome {
    for n in 1..=3 {
        let r = ring(n);
        let kk = k(&r);
        let res = minimal_resolution(&kk, n + 1);
        let betti = res.betti();
        let expected: Vec<usize> = (0..=n).map(|i| binomial(n, i)).collect();
        ensure(betti == expected, || format!("r = {n}: Betti {betti:?}, expected {expected:?}"))?;
        for i in 0..=n {
            ensure(res.free(i).iter().all(|&d| d == i as i32), || format!("r = {n}: F_{i} not generated in degree {i}"))?;
        }
        ensure(check_resolution(&r, &kk, &res, 0, 6), || format!("r = {n}: dense exactness check failed"))?;
        let top = syzygy(&kk, n as i32).map_err(e)?.minimal_presentation();
        ensure(top.is_free_presentation() && top.ngens() == 1, || format!("r = {n}: Ω^r k is not free of rank 1"))?;
        ensure(syzygy(&kk, n as i32 + 1).map_err(e)?.is_zero(), || format!("r = {n}: Ω^(r+1) k ≠ 0"))?;
    }
    Ok("Betti numbers C(r, i) for r = 1, 2, 3".into())
}

/// First `i` with `Ext^i(M, R) ≠ 0`, from the engine's resolution and dense
/// linear algebra.
fn grade_from_resolution(r: &RingRef, m: &ModuleRef) -> Option<usize> {
    let (frees, maps) = resolution_data(&m.resolution());
    (0..=r.nvars()).find(|&i| (-10..=2).any(|d| ext_dim(r, &frees, &maps, &Pres::free(&[0]), i, d) > 0))
}

fn grade_two_ways() -> Outcome {
    let mut cases: Vec<(String, RingRef, ModuleRef, Vec<Polynomial>, usize)> = Vec::new();
    for n in 1..=3 {
        let r = ring(n);
        let vars = (0..n).map(|i| Polynomial::var(&r, i)).collect();
        cases.push((format!("k over {n}"), r.clone(), k(&r), vars, n));
        cases.push((format!("R over {n}"), r.clone(), FPModule::free(&r, &[0]), Vec::new(), 0));
    }
    let r2 = ring(2);
    let m2 = ["x^2", "x*y", "y^2"].iter().map(|s| Polynomial::parse(&r2, s).unwrap()).collect();
    cases.push(("R/m^2 over 2".into(), r2.clone(), FPModule::power_of_maximal_quotient(&r2, 2), m2, 2));
    for (name, r, m, ann, expected) in cases {
        let engine = grade(&m, r.nvars()).map_err(e)?;
        let from_res = grade_from_resolution(&r, &m);
        let from_koszul = koszul_grade(&r, &ann, 8);
        ensure(
            engine == Some(expected) && from_res == Some(expected) && from_koszul == expected,
            || format!("{name}: engine {engine:?}, resolution {from_res:?}, Koszul {from_koszul}, expected {expected}"),
        )?;
    }
    Ok("grade(k) = r, grade(R) = 0, grade(R/m^2) = 2, three ways".into())
}

fn torsionfree_ladder() -> Outcome {
    let r2 = ring(2);
    let m = syzygy(&k(&r2), 1).map_err(e)?;
    ensure(is_d_torsionfree(&m, 1).map_err(e)?, || "m is not 1-torsionfree".into())?;
    ensure(!is_d_torsionfree(&m, 2).map_err(e)?, || "m is 2-torsionfree".into())?;
    let r3 = ring(3);
    let o2 = syzygy(&k(&r3), 2).map_err(e)?;
    ensure(is_d_torsionfree(&o2, 2).map_err(e)?, || "Ω²k is not 2-torsionfree over 3 variables".into())?;
    Ok("m: 1 yes, 2 no; Ω²k over 3 variables: 2 yes".into())
}

fn lemma2_sweep() -> Outcome {
    let mut pairs = 0;
    for n in 2..=3 {
        let r = ring(n);
        for v in stable_vanishing_sweep(&r).map_err(e)? {
            ensure(v.vanishes, || format!("r = {n}: stable Hom(Ω^{} k, Ω^{} k) ≠ 0", v.c, v.c + v.n))?;
            pairs += 1;
        }
        for b in omega_bijections(&r).map_err(e)? {
            ensure(b.bijective(), || format!("r = {n}, c = {}: Ω is not bijective ({b:?})", b.c))?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} vanishing and bijection checks"))
}

fn lemma1_harness() -> Outcome {
    let mut total = 0;
    let mut rejected = 0;
    for (n, seed) in [(2, 2024), (3, 7)] {
        let (cases, rej) = lift_harness(&ring(n), seed, 20).map_err(e)?;
        ensure(cases.len() == 20, || format!("r = {n}: only {} admissible sequences sampled", cases.len()))?;
        ensure(cases.iter().all(|c| c.hypothesis && c.left_exact && c.right_exact), || {
            format!("r = {n}: an induced Hom sequence is not exact")
        })?;
        total += cases.len();
        rejected += rej;
    }
    Ok(format!("{total} sequences exact, {rejected} samples rejected by the hypothesis"))
}

fn scenarios() -> Result<Vec<(String, NCRHypotheses)>, String> {
    let r2 = ring(2);
    let r3 = ring(3);
    let o2 = syzygy(&k(&r3), 2).map_err(e)?;
    let free2 = FPModule::free(&r2, &[0]);
    let free3 = FPModule::free(&r3, &[0]);
    Ok(vec![
        ("M = R, c = 1, r = 2".into(), NCRHypotheses::new(vec![free2], k(&r2), 1, 2)),
        ("M = R, c = 1, r = 3".into(), NCRHypotheses::new(vec![free3.clone()], k(&r3), 1, 3)),
        ("M = R, c = 2, r = 3".into(), NCRHypotheses::new(vec![free3.clone()], k(&r3), 2, 3)),
        ("M = R ⊕ Ω²k, c = 1, r = 3".into(), NCRHypotheses::new(vec![free3, o2], k(&r3), 1, 2)),
    ])
}

fn claim1() -> Outcome {
    for (name, h) in scenarios()? {
        let rep = verify_claim1(&h).map_err(e)?;
        ensure(rep.verdict == Verdict::Verified && rep.d1 == 1 && rep.d2 == 1 && rep.rank == 1, || {
            format!("{name}: {} with D1 = {}, D2 = {}, rank {}", rep.verdict, rep.d1, rep.d2, rep.rank)
        })?;
    }
    Ok("D1 = D2 = 1 and bijective in all four scenarios".into())
}

fn exact2() -> Outcome {
    let mut depths = Vec::new();
    for (name, h) in scenarios()? {
        let rep = verify_exact2(&h, 4).map_err(e)?;
        ensure(rep.verdict == Verdict::Verified, || format!("{name}: {}", rep.verdict))?;
        depths.push(rep.approximation_ranks.len());
    }
    Ok(format!("verified, add-M resolution lengths {depths:?}"))
}

fn corollary_bounds() -> Outcome {
    for (n, cs, bound) in [(2, vec![1], 5u64), (3, vec![2, 1], 15)] {
        let r = ring(n);
        let rep = corollary_build(&k(&r), &cs, 0).map_err(e)?;
        ensure(rep.bound == bound && rep.closed_form == bound, || {
            format!("r = {n}: bound {}, closed form {}, expected {bound}", rep.bound, rep.closed_form)
        })?;
        ensure(
            rep.verdict == Verdict::Verified
                && rep.steps.iter().all(|s| {
                    s.part1.verdict == Verdict::Verified
                        && s.part1.generator == Some(true)
                        && s.part1.c_torsionfree == Some(true)
                }),
            || format!("r = {n}: a step is not verified"),
        )?;
    }
    Ok("bounds 5 and 15, recursive = closed form".into())
}

fn cross_validation() -> Outcome {
    let membership = family::check_membership(11)?;
    let hom = family::check_hom()?;
    let ext = family::check_ext()? + family::check_ext_koszul()?;
    let instances = family::hom_ext_instances().len();
    ensure(instances >= 5, || format!("only {instances} Hom/Ext instances"))?;
    Ok(format!(
        "{membership} membership/dimension, {hom} Hom and {ext} Ext comparisons on {instances} instances"
    ))
}

fn determinism() -> Outcome {
    let jobs = jobs::job_files().len();
    let bad = jobs::nondeterministic_jobs();
    ensure(bad.is_empty(), || format!("differing or failing jobs: {bad:?}"))?;
    Ok(format!("{jobs} jobs identical across two runs and 1 vs 4 threads"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("Koszul oracle", koszul_oracle),
        ("grade", grade_two_ways),
        ("torsionfree ladder", torsionfree_ladder),
        ("stable Hom vanishing and Ω bijections", lemma2_sweep),
        ("lifting along short exact sequences", lemma1_harness),
        ("endomorphism quotient dimensions", claim1),
        ("exactness of the Hom complex", exact2),
        ("inductive bounds", corollary_bounds),
        ("engine cross-validation", cross_validation),
        ("determinism", determinism),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > BUDGET => Err(format!("{detail}, but took {elapsed:.1?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({elapsed:.2?})", i + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL {:>2} {name}: {why} ({elapsed:.2?})", i + 1);
            }
        }
    }
    if failures > 0 {
        println!("{failures} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
    println!("all {} criteria passed", criteria.len());
}
