//! Given-clause saturation under pluggable restriction policies.
//!
//! A run ends in one of three ways: the empty clause is derived
//! ([`Outcome::Refuted`]), no admissible inference yields a new clause
//! ([`Outcome::Saturated`], a finite failure), or the inference budget runs
//! out ([`Outcome::BudgetExhausted`], which is how a non-terminating run
//! shows up).

mod engine;
mod enumerate;
mod infer;
mod policy;
mod replay;

pub use engine::{
    ancestors, saturate, verify_saturated, DiscardReason, Event, Outcome, SaturationConfig,
    SaturationResult,
};
pub use enumerate::{
    enumerate_refutations, enumerate_refutations_within, Refutation, StepKey, DEFAULT_MAX_LEVEL,
    DEFAULT_MAX_NODES,
};
pub use infer::{factors, resolvents};
pub use policy::{Policy, SaturationError};
pub use replay::{replay_clause, replay_derivation, ReplayError};
