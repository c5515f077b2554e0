//! Problem files, the built-in corpus, and the run / compare / rules reports.
//!
//! Every run report ends with exactly one line matching
//! [`MACHINE_LINE_PATTERN`]:
//!
//! ```text
//! OUTCOME: REFUTED|SATURATED|BUDGET generated=N kept=M
//! ```
//!
//! `generated` counts inference conclusions, `kept` the derived clauses that
//! survived variant deletion.

pub mod corpus;
mod problem;
mod report;

pub use problem::{parse_problem, Problem};
pub use report::{
    compare, emit_rules, resolve_policy, run, CompareRow, CompareTable, Method, MethodOptions,
    RunOptions, RunReport, UnknownMethod, WorkbenchError, MACHINE_LINE_PATTERN,
};

use crate::logic::{Signature, SymbolKind, Term};
use crate::syntax::{parse_terms, ParseError, VarTable};

/// Instantiation terms from a comma-separated list such as `a,f`. A bare
/// name the signature knows as a function of arity `n > 0` is applied once
/// to every `n`-tuple of the other listed terms, so `a,f` gives `a, f(a)`.
pub fn term_universe(text: &str, signature: &Signature) -> Result<Vec<Term>, ParseError> {
    let items = parse_terms(text, &mut VarTable::new())?;
    let arity_of = |t: &Term| match t {
        Term::App(f, args) if args.is_empty() => signature
            .arity(f, SymbolKind::Function)
            .filter(|&n| n > 0)
            .map(|n| (f.clone(), n)),
        _ => None,
    };
    let base: Vec<Term> = items
        .iter()
        .filter(|t| arity_of(t).is_none())
        .cloned()
        .collect();
    let mut out = base.clone();
    for (f, n) in items.iter().filter_map(arity_of) {
        let mut tuples: Vec<Vec<Term>> = vec![Vec::new()];
        for _ in 0..n {
            tuples = tuples
                .into_iter()
                .flat_map(|t| {
                    base.iter()
                        .map(move |b| [t.clone(), vec![b.clone()]].concat())
                })
                .collect();
        }
        for args in tuples {
            let t = Term::App(f.clone(), args);
            if !out.contains(&t) {
                out.push(t);
            }
        }
    }
    Ok(out)
}
