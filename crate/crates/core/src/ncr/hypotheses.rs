use crate::document::Value;
use crate::error::{Error, Result};
use crate::fpmod::{direct_sum, syzygy, ModuleRef};
use crate::homalg::{grade, is_d_torsionfree, is_generator, Verdict};

/// Inputs of the construction `M ⊕ Ω^c X`. `M` is the direct sum of
/// `summands`; the global dimensions are trusted, never computed.
#[derive(Clone, Debug)]
pub struct NCRHypotheses {
    pub summands: Vec<ModuleRef>,
    pub x: ModuleRef,
    pub c: i32,
    pub d: i32,
    pub gldim_end_m: u32,
    pub gldim_end_x: u32,
}

/// Results of checking each hypothesis separately.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypothesisCheck {
    pub generator: bool,
    pub d_torsionfree: bool,
    /// `None` means infinite (`X = 0`).
    pub grade_x: Option<usize>,
    pub c_in_range: bool,
}

impl HypothesisCheck {
    pub fn holds(&self) -> bool {
        self.generator && self.d_torsionfree && self.c_in_range
    }

    pub fn to_value(&self) -> Value {
        Value::map()
            .with("generator", self.generator)
            .with("d_torsionfree", self.d_torsionfree)
            .with("grade_x", self.grade_x.map_or("infinite".to_string(), |g| g.to_string()))
            .with("c_in_range", self.c_in_range)
    }
}

impl NCRHypotheses {
    pub fn new(summands: Vec<ModuleRef>, x: ModuleRef, c: i32, d: i32) -> Self {
        NCRHypotheses {
            summands,
            x,
            c,
            d,
            gldim_end_m: 0,
            gldim_end_x: 0,
        }
    }

    pub fn with_gldims(mut self, m: u32, x: u32) -> Self {
        self.gldim_end_m = m;
        self.gldim_end_x = x;
        self
    }

    pub fn m(&self) -> Result<ModuleRef> {
        Ok(direct_sum(&self.summands)?.module)
    }

    /// `d` capped at the number of variables; Ext beyond it vanishes.
    pub fn effective_d(&self) -> i32 {
        self.d.min(self.x.ring().nvars() as i32)
    }

    pub fn check(&self) -> Result<HypothesisCheck> {
        if self.summands.is_empty() {
            return Err(Error::InvalidArgument("M needs at least one summand".into()));
        }
        if self.c < 0 || self.d < 0 {
            return Err(Error::InvalidArgument("c and d must be non-negative".into()));
        }
        let m = self.m()?;
        let r = m.ring().nvars();
        let generator = is_generator(&m)?.is_some();
        let d_torsionfree = is_d_torsionfree(&m, self.effective_d())?;
        let grade_x = grade(&self.x, r)?;
        let bound = grade_x.map_or(self.d, |g| self.d.min(g as i32));
        Ok(HypothesisCheck {
            generator,
            d_torsionfree,
            grade_x,
            c_in_range: self.c < bound,
        })
    }
}

/// `2 gM + gX + 1`.
pub fn theorem_bound(g_m: u32, g_x: u32) -> u64 {
    2 * g_m as u64 + g_x as u64 + 1
}

#[derive(Clone, Debug)]
pub struct Part1Report {
    pub hypotheses: HypothesisCheck,
    pub verdict: Verdict,
    pub generator: Option<bool>,
    pub c_torsionfree: Option<bool>,
}

impl Part1Report {
    pub fn to_value(&self) -> Value {
        let mut v = Value::map()
            .with("hypotheses", self.hypotheses.to_value())
            .with("verdict", self.verdict.to_string());
        if let Some(g) = self.generator {
            v.set("generator", g);
        }
        if let Some(t) = self.c_torsionfree {
            v.set("c_torsionfree", t);
        }
        v
    }
}

/// Checks directly that `M ⊕ Ω^c X` is a `c`-torsionfree generator.
pub fn check_theorem_part1(h: &NCRHypotheses) -> Result<Part1Report> {
    let hyp = h.check()?;
    if !hyp.holds() {
        return Ok(Part1Report {
            hypotheses: hyp,
            verdict: Verdict::HypothesisFailed,
            generator: None,
            c_torsionfree: None,
        });
    }
    let mut parts = h.summands.clone();
    parts.push(syzygy(&h.x, h.c)?);
    let sum = direct_sum(&parts)?.module;
    let generator = is_generator(&sum)?.is_some();
    let c_torsionfree = is_d_torsionfree(&sum, h.c)?;
    if !generator || !c_torsionfree {
        return Err(Error::Falsified(format!(
            "M ⊕ Ω^{} X: generator = {generator}, {}-torsionfree = {c_torsionfree}",
            h.c, h.c
        )));
    }
    Ok(Part1Report {
        hypotheses: hyp,
        verdict: Verdict::Verified,
        generator: Some(generator),
        c_torsionfree: Some(c_torsionfree),
    })
}
