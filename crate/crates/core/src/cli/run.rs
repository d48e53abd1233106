use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;

use crate::document::Value;
use crate::error::{Error, Result};
use crate::fpmod::{hilbert_range, k_dimension, syzygy, FPModule, ModuleRef};
use crate::homalg::{ext, grade, hom_module, is_d_torsionfree, ring_module, stable_hom, transpose, Verdict};
use crate::ncr::{
    corollary_build, describe_betti, describe_module, theorem_bound, verify_claim1, verify_exact2, verify_lemmas,
    NCRHypotheses,
};
use crate::ring::RingRef;

use super::job::{Command, JobSpec, BUILTIN_MODULES};

pub const ENGINE_NAME: &str = "syzygy-ncr";
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunOptions {
    /// Last degree of the Hilbert functions printed in reports.
    pub max_degree: i32,
    /// Depth used when the job does not set one.
    pub depth: usize,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { max_degree: 6, depth: 4 }
    }
}

#[derive(Clone, Debug)]
pub struct JobReport {
    pub command: Command,
    /// Deterministic part: identical across runs and thread counts.
    pub canonical: Value,
    pub timing: Value,
    pub verdicts: Vec<(String, Verdict)>,
}

impl JobReport {
    /// Exit status is zero exactly when this holds.
    pub fn succeeded(&self) -> bool {
        self.command.is_pure() || self.verdicts.iter().all(|(_, v)| *v == Verdict::Verified)
    }

    pub fn to_value(&self) -> Value {
        Value::map().with("report", self.canonical.clone()).with("timing", self.timing.clone())
    }

    pub fn to_document(&self) -> String {
        self.to_value().to_document()
    }

    /// Plain-text summary of the result section.
    pub fn summary(&self) -> String {
        let mut out = format!("{ENGINE_NAME} {ENGINE_VERSION}: {}\n", self.command);
        if let Some(Value::Map(result)) = self.canonical.get("result") {
            for (k, v) in result {
                if let Value::Scalar(s) = v {
                    out.push_str(&format!("  {k}: {s}\n"));
                }
            }
        }
        for (item, v) in &self.verdicts {
            out.push_str(&format!("  [{v}] {item}\n"));
        }
        out.push_str(if self.succeeded() { "status: ok\n" } else { "status: not verified\n" });
        out
    }
}

struct Clock {
    steps: BTreeMap<String, u128>,
}

impl Clock {
    /// Runs `f`, recording its wall time and naming it in any error.
    fn step<T>(&mut self, name: &str, f: impl FnOnce() -> Result<T>) -> Result<T> {
        let t = Instant::now();
        let out = f().map_err(|e| match e {
            Error::Falsified(msg) => Error::Falsified(format!("{name}: {msg}")),
            e @ Error::Job { .. } => e,
            e => Error::Job {
                location: format!("run {name}"),
                message: e.to_string(),
            },
        });
        self.steps.insert(name.to_string(), t.elapsed().as_micros());
        out
    }
}

fn kdim_value(m: &FPModule) -> Value {
    Value::str(k_dimension(m).to_string())
}

fn hilbert_value(m: &FPModule, max_degree: i32) -> Value {
    let lo = m.gen_degrees().iter().copied().min().unwrap_or(0).min(max_degree);
    Value::map()
        .with("from_degree", lo)
        .with("values", Value::list(hilbert_range(m, lo, max_degree)))
}

fn module_value(m: &ModuleRef, max_degree: i32) -> Value {
    Value::map()
        .with("presentation", describe_module(&m.minimal_presentation()))
        .with("k_dimension", kdim_value(m))
        .with("hilbert", hilbert_value(m, max_degree))
}

fn module_with_betti(m: &ModuleRef, max_degree: i32) -> Value {
    module_value(m, max_degree).with("resolution", describe_betti(&m.resolution()))
}

/// Names of the modules a job refers to, declared ones first.
fn referenced_modules(job: &JobSpec) -> Vec<String> {
    let p = &job.params;
    let mut names: Vec<String> = job.modules.keys().cloned().collect();
    let refs = [&p.module, &p.source, &p.target, &p.x, &p.n]
        .into_iter()
        .flatten()
        .chain(p.m.iter().flatten());
    for name in refs {
        if BUILTIN_MODULES.contains(&name.as_str()) && !names.contains(name) {
            names.push(name.clone());
        }
    }
    names.sort();
    names
}

fn hypotheses(job: &JobSpec, ring: &RingRef) -> Result<NCRHypotheses> {
    let p = &job.params;
    let summands = p
        .m
        .iter()
        .flatten()
        .map(|n| job.module(ring, n))
        .collect::<Result<Vec<_>>>()?;
    let x = job.module(ring, p.x.as_deref().expect("validated"))?;
    let d = p.d.unwrap_or(ring.nvars() as i32);
    Ok(NCRHypotheses::new(summands, x, p.c.expect("validated"), d)
        .with_gldims(p.gldim_end_m.unwrap_or(0), p.gldim_end_x.unwrap_or(0)))
}

/// Runs a validated job.
pub fn run_job(job: &JobSpec, opts: &RunOptions) -> Result<JobReport> {
    let start = Instant::now();
    let mut clock = Clock { steps: BTreeMap::new() };
    let ring = clock.step("ring", || job.ring.build())?;
    let max_degree = opts.max_degree;
    let p = &job.params;
    let module = |name: &Option<String>| job.module(&ring, name.as_deref().expect("validated"));

    let names = referenced_modules(job);
    let modules: Vec<Value> = clock.step("modules", || {
        names
            .par_iter()
            .map(|n| Ok(module_with_betti(&job.module(&ring, n)?, max_degree)))
            .collect::<Result<Vec<_>>>()
    })?;
    let mut module_section = Value::map();
    for (n, v) in names.iter().zip(modules) {
        module_section.set(n.as_str(), v);
    }

    let mut verdicts: Vec<(String, Verdict)> = Vec::new();
    let name = job.command.name();
    let result = match job.command {
        Command::Grade => clock.step(name, || {
            let m = module(&p.module)?;
            let g = grade(&m, ring.nvars())?;
            Ok(Value::map().with("grade", g.map_or("infinite".to_string(), |g| g.to_string())))
        })?,
        Command::Syzygy => clock.step(name, || {
            let omega = syzygy(&module(&p.module)?, p.c.expect("validated"))?;
            Ok(Value::map().with("c", p.c.unwrap()).with("syzygy", module_with_betti(&omega, max_degree)))
        })?,
        Command::Torsionfree => clock.step(name, || {
            let m = module(&p.module)?;
            let d = p.d.expect("validated");
            let tr = transpose(&m)?;
            let r = ring_module(&m);
            let vanishing = (1..=d).map(|i| Ok(ext(i, &tr, &r)?.is_zero())).collect::<Result<Vec<bool>>>()?;
            Ok(Value::map()
                .with("d", d)
                .with("torsionfree", is_d_torsionfree(&m, d)?)
                .with("ext_of_transpose_vanishes", Value::list(vanishing)))
        })?,
        Command::Ext => clock.step(name, || {
            let e = ext(p.i.expect("validated"), &module(&p.source)?, &module(&p.target)?)?;
            Ok(Value::map().with("i", p.i.unwrap()).with("ext", module_value(&e, max_degree)))
        })?,
        Command::Hom => clock.step(name, || {
            let h = hom_module(&module(&p.source)?, &module(&p.target)?)?;
            Ok(Value::map().with("hom", module_value(&h.module, max_degree)))
        })?,
        Command::StableHom => clock.step(name, || {
            let s = stable_hom(&module(&p.source)?, &module(&p.target)?)?;
            Ok(Value::map()
                .with("is_zero", s.is_zero())
                .with("hom", module_value(&s.total.module, max_degree))
                .with("stable_hom", module_value(&s.quotient.module, max_degree)))
        })?,
        Command::Transpose => clock.step(name, || {
            let t = transpose(&module(&p.module)?)?;
            Ok(Value::map().with("transpose", module_value(&t, max_degree)))
        })?,
        Command::Build => {
            let rep = clock.step(name, || {
                corollary_build(&module(&p.n)?, p.cs.as_deref().expect("validated"), p.gldim_end_n.unwrap_or(0))
            })?;
            for s in &rep.steps {
                verdicts.push((format!("step {} (c = {})", s.j, s.c), s.part1.verdict));
            }
            verdicts.push(("bound".into(), rep.verdict));
            rep.to_value()
        }
        Command::VerifyClaim1 => {
            let rep = clock.step(name, || verify_claim1(&hypotheses(job, &ring)?))?;
            verdicts.push(("claim 1".into(), rep.verdict));
            rep.to_value()
        }
        Command::VerifyExact2 => {
            let depth = p.depth.unwrap_or(opts.depth);
            let rep = clock.step(name, || verify_exact2(&hypotheses(job, &ring)?, depth))?;
            verdicts.push(("exactness".into(), rep.verdict));
            rep.to_value()
        }
        Command::VerifyLemmas => {
            let rep = clock.step(name, || verify_lemmas(&ring, p.seed.unwrap_or(0), p.count.unwrap_or(20)))?;
            verdicts.push(("lemmas".into(), rep.verdict));
            rep.to_value()
        }
    };
    let mut result = result;
    if let (Some(gm), Some(gx)) = (p.gldim_end_m, p.gldim_end_x) {
        result.set("theorem_bound", theorem_bound(gm, gx));
    }

    let verdict_list = verdicts.iter().map(|(item, v)| Value::map().with("item", item.as_str()).with("verdict", v.to_string()));
    let canonical = Value::map()
        .with("engine", Value::map().with("name", ENGINE_NAME).with("version", ENGINE_VERSION))
        .with("job", job.to_value())
        .with("ring", ring.to_string())
        .with("modules", module_section)
        .with("result", result)
        .with("verdicts", Value::List(verdict_list.collect()));
    let mut timing = Value::map()
        .with("total_us", start.elapsed().as_micros() as u64)
        .with("threads", rayon::current_num_threads());
    for (k, us) in clock.steps {
        timing.set(format!("{k}_us"), us as u64);
    }
    Ok(JobReport {
        command: job.command,
        canonical,
        timing,
        verdicts,
    })
}
