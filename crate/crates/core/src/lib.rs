//! A first-order resolution workbench.
//!
//! Four restriction policies share one given-clause saturation loop: plain
//! binary resolution, set of support, ordered resolution with selection, and
//! polarized resolution modulo. One-way theory clauses translate into
//! polarized rewrite rules, and proofs in the polarized sequent calculus
//! modulo those rules can be checked or searched for (cut-free, bounded).

pub mod logic;
pub mod ordering;
pub mod rewrite;
pub mod saturation;
pub mod sequent;
pub mod syntax;
pub mod workbench;
