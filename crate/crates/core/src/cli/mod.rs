//! Batch jobs: a job document names a ring, some modules and one command;
//! running it yields a report whose `report` section is canonical and whose
//! `timing` section is not.
//!
//! ```text
//! ring: {char: 101, vars: [x, y], order: grevlex}
//! module m: {gens: [1, 1], relations: [[y], [-x]]}
//! command: grade
//! module: m
//! ```
//!
//! `R` and `k` are always available. A module may also be declared as a
//! syzygy of another one: `module O2: {syzygy: k, c: 2}`.

mod job;
mod run;

pub use job::{parse_job, Command, JobSpec, ModuleSpec, Params, RingSpec, BUILTIN_MODULES};
pub use run::{run_job, JobReport, RunOptions, ENGINE_NAME, ENGINE_VERSION};

#[cfg(test)]
mod tests;
