//! Hypothesis checks, bounds and mechanical verification for the
//! construction `M ⊕ Ω^c X`.

mod claims;
mod corollary;
mod hypotheses;
mod lemmas;

pub use claims::{verify_claim1, verify_exact2, Claim1Report, Exact2Report};
pub use corollary::{
    closed_form_bound, corollary_build, describe_betti, describe_module, normalize_cs, CorollaryReport, CorollaryStep,
};
pub use lemmas::{
    lemma_family, lift_harness, omega_bijections, stable_vanishing_sweep, verify_lemmas, LemmasReport, LiftCase,
    OmegaBijection, Vanishing,
};
pub use hypotheses::{check_theorem_part1, theorem_bound, HypothesisCheck, NCRHypotheses, Part1Report};
