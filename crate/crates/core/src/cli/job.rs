use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::document::{self, Value};
use crate::error::{Error, Result};
use crate::fpmod::{syzygy, FPModule, ModuleRef};
use crate::ring::{ModuleOrder, MonomialOrder, Ring, RingRef};

fn job_err(location: impl Into<String>, message: impl fmt::Display) -> Error {
    Error::Job {
        location: location.into(),
        message: message.to_string(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Command {
    Grade,
    Syzygy,
    Torsionfree,
    Ext,
    Hom,
    StableHom,
    Transpose,
    Build,
    VerifyClaim1,
    VerifyExact2,
    VerifyLemmas,
}

impl Command {
    pub const ALL: [Command; 11] = [
        Command::Grade,
        Command::Syzygy,
        Command::Torsionfree,
        Command::Ext,
        Command::Hom,
        Command::StableHom,
        Command::Transpose,
        Command::Build,
        Command::VerifyClaim1,
        Command::VerifyExact2,
        Command::VerifyLemmas,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Grade => "grade",
            Command::Syzygy => "syzygy",
            Command::Torsionfree => "torsionfree",
            Command::Ext => "ext",
            Command::Hom => "hom",
            Command::StableHom => "stablehom",
            Command::Transpose => "transpose",
            Command::Build => "build",
            Command::VerifyClaim1 => "verify-claim1",
            Command::VerifyExact2 => "verify-exact2",
            Command::VerifyLemmas => "verify-lemmas",
        }
    }

    /// Pure computations report values, not verdicts.
    pub fn is_pure(self) -> bool {
        !matches!(
            self,
            Command::Build | Command::VerifyClaim1 | Command::VerifyExact2 | Command::VerifyLemmas
        )
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Command {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Command::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| job_err("command", format!("unknown command `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingSpec {
    pub characteristic: u64,
    pub vars: Vec<String>,
    pub order: MonomialOrder,
}

impl RingSpec {
    pub fn build(&self) -> Result<RingRef> {
        let vars: Vec<&str> = self.vars.iter().map(String::as_str).collect();
        Ring::new(self.characteristic, &vars, self.order, ModuleOrder::SchreyerInduced)
            .map(Arc::new)
            .map_err(|e| job_err("ring", e))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleSpec {
    /// Relation matrix given by rows, one per generator.
    Presented { gens: Vec<i32>, relations: Vec<Vec<String>> },
    /// `Ω^c` of another named module.
    Syzygy { of: String, c: i32 },
}

/// Command parameters; which ones are required depends on the command.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Params {
    pub module: Option<String>,
    pub source: Option<String>,
    pub target: Option<String>,
    /// Summands of `M`.
    pub m: Option<Vec<String>>,
    pub x: Option<String>,
    pub n: Option<String>,
    pub c: Option<i32>,
    pub d: Option<i32>,
    pub i: Option<i32>,
    pub cs: Option<Vec<i32>>,
    pub depth: Option<usize>,
    pub seed: Option<u64>,
    pub count: Option<usize>,
    pub gldim_end_m: Option<u32>,
    pub gldim_end_x: Option<u32>,
    pub gldim_end_n: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobSpec {
    pub ring: RingSpec,
    pub modules: BTreeMap<String, ModuleSpec>,
    pub command: Command,
    pub params: Params,
}

/// Names every job can use without declaring them.
pub const BUILTIN_MODULES: [&str; 2] = ["R", "k"];

fn scalar<'a>(v: &'a Value, loc: &str) -> Result<&'a str> {
    v.as_scalar().ok_or_else(|| job_err(loc, "expected a scalar"))
}

fn number<T: FromStr>(v: &Value, loc: &str) -> Result<T> {
    let s = scalar(v, loc)?;
    s.parse().map_err(|_| job_err(loc, format!("`{s}` is not a valid integer here")))
}

fn list<'a>(v: &'a Value, loc: &str) -> Result<&'a [Value]> {
    v.as_list().ok_or_else(|| job_err(loc, "expected a list"))
}

fn numbers<T: FromStr>(v: &Value, loc: &str) -> Result<Vec<T>> {
    list(v, loc)?
        .iter()
        .enumerate()
        .map(|(i, x)| number(x, &format!("{loc}[{i}]")))
        .collect()
}

fn names(v: &Value, loc: &str) -> Result<Vec<String>> {
    match v {
        Value::Scalar(s) => Ok(vec![s.clone()]),
        Value::List(items) => items
            .iter()
            .enumerate()
            .map(|(i, x)| scalar(x, &format!("{loc}[{i}]")).map(str::to_string))
            .collect(),
        Value::Map(_) => Err(job_err(loc, "expected a module name or a list of names")),
    }
}

fn check_keys(map: &BTreeMap<String, Value>, allowed: &[&str], loc: &str) -> Result<()> {
    match map.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(job_err(format!("{loc}.{k}"), "unknown key")),
        None => Ok(()),
    }
}

fn parse_ring(v: &Value) -> Result<RingSpec> {
    let map = v.as_map().ok_or_else(|| job_err("ring", "expected a map"))?;
    check_keys(map, &["char", "p", "vars", "order"], "ring")?;
    let characteristic = match (map.get("char"), map.get("p")) {
        (Some(_), Some(_)) => return Err(job_err("ring", "give either `char` or `p`, not both")),
        (Some(c), None) => number(c, "ring.char")?,
        (None, Some(c)) => number(c, "ring.p")?,
        (None, None) => crate::field::DEFAULT_CHARACTERISTIC,
    };
    let vars = map.get("vars").ok_or_else(|| job_err("ring.vars", "missing"))?;
    let vars = names(vars, "ring.vars")?;
    let order = match map.get("order") {
        Some(o) => scalar(o, "ring.order")?.parse().map_err(|e| job_err("ring.order", e))?,
        None => MonomialOrder::Grevlex,
    };
    let spec = RingSpec {
        characteristic,
        vars,
        order,
    };
    spec.build()?;
    Ok(spec)
}

fn parse_module(name: &str, v: &Value) -> Result<ModuleSpec> {
    let loc = format!("module {name}");
    let map = v.as_map().ok_or_else(|| job_err(&loc, "expected a map"))?;
    if let Some(of) = map.get("syzygy") {
        check_keys(map, &["syzygy", "c"], &loc)?;
        let of = scalar(of, &format!("{loc}.syzygy"))?.to_string();
        let c = map.get("c").ok_or_else(|| job_err(format!("{loc}.c"), "missing"))?;
        let c = number(c, &format!("{loc}.c"))?;
        if c < 0 {
            return Err(job_err(format!("{loc}.c"), "must be non-negative"));
        }
        return Ok(ModuleSpec::Syzygy { of, c });
    }
    check_keys(map, &["gens", "relations"], &loc)?;
    let gens = map.get("gens").ok_or_else(|| job_err(format!("{loc}.gens"), "missing"))?;
    let gens = numbers(gens, &format!("{loc}.gens"))?;
    let relations = match map.get("relations") {
        None => Vec::new(),
        Some(rows) => list(rows, &format!("{loc}.relations"))?
            .iter()
            .enumerate()
            .map(|(i, row)| names(row, &format!("{loc}.relations[{i}]")))
            .collect::<Result<_>>()?,
    };
    Ok(ModuleSpec::Presented { gens, relations })
}

fn build_presented(ring: &RingRef, name: &str, gens: &[i32], relations: &[Vec<String>]) -> Result<ModuleRef> {
    let loc = format!("module {name}");
    if !relations.is_empty() && relations.len() != gens.len() {
        return Err(job_err(
            format!("{loc}.relations"),
            format!("{} rows for {} generators", relations.len(), gens.len()),
        ));
    }
    for (i, row) in relations.iter().enumerate() {
        if row.len() != relations[0].len() {
            return Err(job_err(format!("{loc}.relations[{i}]"), "rows have different lengths"));
        }
        for (j, s) in row.iter().enumerate() {
            crate::poly::Polynomial::parse(ring, s).map_err(|e| job_err(format!("{loc}.relations[{i}][{j}]"), e))?;
        }
    }
    let rows: Vec<Vec<&str>> = relations.iter().map(|r| r.iter().map(String::as_str).collect()).collect();
    FPModule::from_rows(ring, gens.to_vec(), &rows).map_err(|e| job_err(format!("{loc}.relations"), e))
}

impl JobSpec {
    /// Resolves a module name against the declarations and the built-ins.
    pub fn module(&self, ring: &RingRef, name: &str) -> Result<ModuleRef> {
        self.resolve(ring, name, &mut BTreeSet::new())
    }

    fn resolve(&self, ring: &RingRef, name: &str, stack: &mut BTreeSet<String>) -> Result<ModuleRef> {
        match self.modules.get(name) {
            None => match name {
                "R" => Ok(FPModule::free(ring, &[0])),
                "k" => Ok(FPModule::residue_field(ring)),
                _ => Err(job_err(format!("module {name}"), "undefined module")),
            },
            Some(ModuleSpec::Presented { gens, relations }) => build_presented(ring, name, gens, relations),
            Some(ModuleSpec::Syzygy { of, c }) => {
                if !stack.insert(name.to_string()) {
                    return Err(job_err(format!("module {name}"), "cyclic syzygy definition"));
                }
                let base = self.resolve(ring, of, stack)?;
                stack.remove(name);
                syzygy(&base, *c).map_err(|e| job_err(format!("module {name}"), e))
            }
        }
    }

    fn check_reference(&self, name: &str, loc: &str) -> Result<()> {
        if self.modules.contains_key(name) || BUILTIN_MODULES.contains(&name) {
            Ok(())
        } else {
            Err(job_err(loc, format!("undefined module `{name}`")))
        }
    }

    /// Checks names, ranges and presentations without running anything heavy.
    pub fn validate(&self) -> Result<()> {
        let ring = self.ring.build()?;
        if self.modules.contains_key("R") {
            return Err(job_err("module R", "`R` is reserved for the ring itself"));
        }
        for (name, spec) in &self.modules {
            match spec {
                ModuleSpec::Presented { gens, relations } => {
                    build_presented(&ring, name, gens, relations)?;
                }
                ModuleSpec::Syzygy { of, .. } => {
                    self.check_reference(of, &format!("module {name}.syzygy"))?;
                    // cycle detection without computing anything
                    let mut seen = BTreeSet::from([name.clone()]);
                    let mut cur = of.clone();
                    while let Some(ModuleSpec::Syzygy { of: next, .. }) = self.modules.get(&cur) {
                        if !seen.insert(cur.clone()) {
                            return Err(job_err(format!("module {name}"), "cyclic syzygy definition"));
                        }
                        cur = next.clone();
                    }
                }
            }
        }
        let p = &self.params;
        let r = ring.nvars() as i32;
        let need = |v: bool, key: &str| -> Result<()> {
            if v {
                Ok(())
            } else {
                Err(job_err(key, format!("required by `{}`", self.command)))
            }
        };
        let non_negative = |v: Option<i32>, key: &str| -> Result<()> {
            match v {
                Some(x) if x < 0 => Err(job_err(key, "must be non-negative")),
                _ => Ok(()),
            }
        };
        non_negative(p.c, "c")?;
        non_negative(p.d, "d")?;
        non_negative(p.i, "i")?;
        if p.depth == Some(0) {
            return Err(job_err("depth", "must be at least 1"));
        }
        let mut refs: Vec<(&str, &str)> = Vec::new();
        for (key, v) in [("module", &p.module), ("source", &p.source), ("target", &p.target), ("X", &p.x), ("N", &p.n)] {
            if let Some(name) = v {
                refs.push((name, key));
            }
        }
        for name in p.m.iter().flatten() {
            refs.push((name, "M"));
        }
        for (name, key) in refs {
            self.check_reference(name, key)?;
        }
        match self.command {
            Command::Grade | Command::Transpose => need(p.module.is_some(), "module")?,
            Command::Syzygy => {
                need(p.module.is_some(), "module")?;
                need(p.c.is_some(), "c")?;
            }
            Command::Torsionfree => {
                need(p.module.is_some(), "module")?;
                need(p.d.is_some(), "d")?;
            }
            Command::Hom | Command::StableHom => {
                need(p.source.is_some(), "source")?;
                need(p.target.is_some(), "target")?;
            }
            Command::Ext => {
                need(p.source.is_some(), "source")?;
                need(p.target.is_some(), "target")?;
                need(p.i.is_some(), "i")?;
            }
            Command::Build => {
                need(p.n.is_some(), "N")?;
                need(p.cs.is_some(), "cs")?;
                if let Some(c) = p.cs.iter().flatten().find(|&&c| c < 0 || c >= r) {
                    return Err(job_err("cs", format!("{c} is outside 0..{r}")));
                }
            }
            Command::VerifyClaim1 | Command::VerifyExact2 => {
                need(p.m.as_ref().is_some_and(|m| !m.is_empty()), "M")?;
                need(p.x.is_some(), "X")?;
                need(p.c.is_some(), "c")?;
            }
            Command::VerifyLemmas => {}
        }
        Ok(())
    }

    pub fn to_value(&self) -> Value {
        let mut v = Value::map()
            .with(
                "ring",
                Value::map()
                    .with("char", self.ring.characteristic)
                    .with("vars", Value::list(self.ring.vars.iter().map(String::as_str)))
                    .with("order", self.ring.order.to_string()),
            )
            .with("command", self.command.name());
        for (name, spec) in &self.modules {
            let body = match spec {
                ModuleSpec::Presented { gens, relations } => Value::map()
                    .with("gens", Value::list(gens.iter().copied()))
                    .with(
                        "relations",
                        Value::List(relations.iter().map(|r| Value::list(r.iter().map(String::as_str))).collect()),
                    ),
                ModuleSpec::Syzygy { of, c } => Value::map().with("syzygy", of.as_str()).with("c", *c),
            };
            v.set(format!("module {name}"), body);
        }
        let p = &self.params;
        let mut put = |key: &str, val: Option<Value>| {
            if let Some(val) = val {
                v.set(key, val);
            }
        };
        put("module", p.module.as_deref().map(Value::from));
        put("source", p.source.as_deref().map(Value::from));
        put("target", p.target.as_deref().map(Value::from));
        put("M", p.m.as_ref().map(|m| Value::list(m.iter().map(String::as_str))));
        put("X", p.x.as_deref().map(Value::from));
        put("N", p.n.as_deref().map(Value::from));
        put("c", p.c.map(Value::from));
        put("d", p.d.map(Value::from));
        put("i", p.i.map(Value::from));
        put("cs", p.cs.as_ref().map(|cs| Value::list(cs.iter().copied())));
        put("depth", p.depth.map(Value::from));
        put("seed", p.seed.map(Value::from));
        put("count", p.count.map(Value::from));
        put("gldim_end_M", p.gldim_end_m.map(Value::from));
        put("gldim_end_X", p.gldim_end_x.map(Value::from));
        put("gldim_end_N", p.gldim_end_n.map(Value::from));
        v
    }

    pub fn to_document(&self) -> String {
        self.to_value().to_document()
    }
}

const PARAM_KEYS: [&str; 16] = [
    "module",
    "source",
    "target",
    "M",
    "X",
    "N",
    "c",
    "d",
    "i",
    "cs",
    "depth",
    "seed",
    "count",
    "gldim_end_M",
    "gldim_end_X",
    "gldim_end_N",
];

/// Parses and validates a job document.
pub fn parse_job(text: &str) -> Result<JobSpec> {
    let doc = document::parse(text)?;
    let map = doc.as_map().expect("documents are maps");
    let ring = parse_ring(map.get("ring").ok_or_else(|| job_err("ring", "missing"))?)?;
    let command = scalar(map.get("command").ok_or_else(|| job_err("command", "missing"))?, "command")?.parse()?;
    let mut modules = BTreeMap::new();
    let mut params = Params::default();
    for (key, v) in map {
        if let Some(name) = key.strip_prefix("module ") {
            modules.insert(name.to_string(), parse_module(name, v)?);
            continue;
        }
        match key.as_str() {
            "ring" | "command" => {}
            "module" => params.module = Some(scalar(v, key)?.to_string()),
            "source" => params.source = Some(scalar(v, key)?.to_string()),
            "target" => params.target = Some(scalar(v, key)?.to_string()),
            "M" => params.m = Some(names(v, key)?),
            "X" => params.x = Some(scalar(v, key)?.to_string()),
            "N" => params.n = Some(scalar(v, key)?.to_string()),
            "c" => params.c = Some(number(v, key)?),
            "d" => params.d = Some(number(v, key)?),
            "i" => params.i = Some(number(v, key)?),
            "cs" => params.cs = Some(numbers(v, key)?),
            "depth" => params.depth = Some(number(v, key)?),
            "seed" => params.seed = Some(number(v, key)?),
            "count" => params.count = Some(number(v, key)?),
            "gldim_end_M" => params.gldim_end_m = Some(number(v, key)?),
            "gldim_end_X" => params.gldim_end_x = Some(number(v, key)?),
            "gldim_end_N" => params.gldim_end_n = Some(number(v, key)?),
            _ => {
                return Err(job_err(
                    key.as_str(),
                    format!("unknown key (expected ring, command, module <name>, or one of {})", PARAM_KEYS.join(", ")),
                ))
            }
        }
    }
    let job = JobSpec {
        ring,
        modules,
        command,
        params,
    };
    job.validate()?;
    Ok(job)
}
