//! Propositions, polarized rewrite rules and polarity-aware rewriting.
//!
//! A rule `P →- A` may only fire on an atomic occurrence of negative
//! polarity and `P →+ A` only on a positive one. The polarity of an
//! occurrence is the sign given to the whole formula, flipped once for every
//! enclosing negation.

mod prop;
mod rule;
mod step;

pub use prop::{Path, Prop, Sign};
pub use rule::{
    check_disjoint_criterion, clause_to_rule, overlapping_heads, theory_rules, PolarizedRule,
    RewriteSystem, RuleError, RuleId,
};
pub use step::{
    format_path, occurrence_polarity, reachable, rewrite_step, rewrites_to, successors,
    RewriteError, RewriteStep, RewriteTrace,
};
