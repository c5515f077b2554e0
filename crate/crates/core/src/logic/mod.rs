//! Terms, atoms, literals, clauses, substitutions and syntactic unification.

mod clause;
mod signature;
mod subst;
mod term;
mod unify;

pub use clause::{
    is_variant, literals_variant, rename_apart, renaming_apart, subsumes, Clause, ClauseId,
    Provenance, Role,
};
pub use signature::{ArityClash, Signature, Symbol, SymbolKind};
pub use subst::{Substitute, Substitution};
pub use term::{Atom, HasVars, Literal, Sym, Term, Var};
pub use unify::{match_atom, unify, unify_terms, UnifyError};
