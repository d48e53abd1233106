use crate::document::Value;
use crate::error::{Error, Result};
use crate::fpmod::{k_dimension, syzygy, FPModule, FreeResolution, KDim, ModuleRef};
use crate::homalg::Verdict;

use super::hypotheses::{check_theorem_part1, theorem_bound, NCRHypotheses, Part1Report};

/// Generators and relation rows of a presentation.
pub fn describe_module(m: &FPModule) -> Value {
    let rows = m.relations().rows_display(m.ring());
    Value::map()
        .with("gens", Value::list(m.gen_degrees().iter().copied()))
        .with(
            "relations",
            Value::List(rows.into_iter().map(Value::list).collect()),
        )
}

/// Degrees of the free modules of a resolution, one list per index.
pub fn describe_betti(res: &FreeResolution) -> Value {
    Value::List(res.frees.iter().map(|f| Value::list(f.iter().copied())).collect())
}

#[derive(Clone, Debug)]
pub struct CorollaryStep {
    pub j: usize,
    pub c: i32,
    /// Torsionfreeness assumed of `M_{j-1}`.
    pub d: i32,
    pub part1: Part1Report,
    pub bound: u64,
    pub summand: ModuleRef,
}

#[derive(Clone, Debug)]
pub struct CorollaryReport {
    pub r: usize,
    pub cs: Vec<i32>,
    pub gldim_end_n: u32,
    pub steps: Vec<CorollaryStep>,
    pub bound: u64,
    pub closed_form: u64,
    pub verdict: Verdict,
}

impl CorollaryReport {
    pub fn to_value(&self) -> Value {
        let steps: Vec<Value> = self
            .steps
            .iter()
            .map(|s| {
                Value::map()
                    .with("j", s.j)
                    .with("c", s.c)
                    .with("d", s.d)
                    .with("bound", s.bound)
                    .with("part1", s.part1.to_value())
                    .with("summand", describe_module(&s.summand))
                    .with("summand_betti", describe_betti(&s.summand.resolution()))
            })
            .collect();
        Value::map()
            .with("r", self.r)
            .with("cs", Value::list(self.cs.iter().copied()))
            .with("gldim_end_n", self.gldim_end_n)
            .with("steps", Value::List(steps))
            .with("bound", self.bound)
            .with("closed_form", self.closed_form)
            .with("bound_matches_closed_form", self.bound == self.closed_form)
            .with("verdict", self.verdict.to_string())
    }
}

/// Strictly decreasing, duplicates removed.
pub fn normalize_cs(cs: &[i32]) -> Vec<i32> {
    let mut v = cs.to_vec();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v.dedup();
    v
}

/// `2^n r + (2^n - 1)(g + 1)`.
pub fn closed_form_bound(r: usize, n: usize, g: u32) -> u64 {
    let p = 1u64 << n;
    p * r as u64 + (p - 1) * (g as u64 + 1)
}

/// Builds `R ⊕ Ω^{c_1} N ⊕ ... ⊕ Ω^{c_n} N` one summand at a time, checking
/// each step and accumulating the bound.
pub fn corollary_build(n: &ModuleRef, cs: &[i32], gldim_end_n: u32) -> Result<CorollaryReport> {
    let ring = n.ring();
    let r = ring.nvars();
    match k_dimension(n) {
        KDim::Finite(0) => return Err(Error::InvalidArgument("N must be nonzero".into())),
        KDim::Infinite => return Err(Error::NotFiniteLength),
        KDim::Finite(_) => {}
    }
    if let Some(c) = cs.iter().find(|&&c| c < 0 || c as usize >= r) {
        return Err(Error::InvalidArgument(format!("c = {c} outside 0..{r}")));
    }
    let cs = normalize_cs(cs);
    let mut summands = vec![FPModule::free(ring, &[0])];
    let mut bound = r as u64;
    let mut prev_c = r as i32;
    let mut steps = Vec::new();
    for (idx, &c) in cs.iter().enumerate() {
        let h = NCRHypotheses::new(summands.clone(), n.clone(), c, prev_c).with_gldims(bound as u32, gldim_end_n);
        let part1 = check_theorem_part1(&h)?;
        if part1.verdict != Verdict::Verified {
            return Err(Error::Falsified(format!(
                "step {}: hypotheses of the inductive step fail ({:?})",
                idx + 1,
                part1.hypotheses
            )));
        }
        bound = theorem_bound(bound as u32, gldim_end_n);
        let summand = syzygy(n, c)?;
        summands.push(summand.clone());
        steps.push(CorollaryStep {
            j: idx + 1,
            c,
            d: prev_c,
            part1,
            bound,
            summand,
        });
        prev_c = c;
    }
    let closed_form = closed_form_bound(r, cs.len(), gldim_end_n);
    if bound != closed_form {
        return Err(Error::Internal(format!("recursive bound {bound} differs from closed form {closed_form}")));
    }
    Ok(CorollaryReport {
        r,
        cs,
        gldim_end_n,
        steps,
        bound,
        closed_form,
        verdict: Verdict::Verified,
    })
}
