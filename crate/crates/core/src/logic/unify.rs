//! Syntactic unification and one-way matching.
//!
//! The occurs check is always performed.

use std::collections::BTreeMap;

use thiserror::Error;

use super::subst::Substitution;
use super::term::{Atom, Term, Var};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum UnifyError {
    #[error("symbol clash")]
    Clash,
    #[error("occurs check")]
    OccursCheck,
}

/// Most general unifier of two atoms. The result is idempotent.
pub fn unify(a: &Atom, b: &Atom) -> Result<Substitution, UnifyError> {
    if a.pred != b.pred || a.args.len() != b.args.len() {
        return Err(UnifyError::Clash);
    }
    let mut sigma = Substitution::new();
    let mut pending: Vec<(Term, Term)> = a
        .args
        .iter()
        .cloned()
        .zip(b.args.iter().cloned())
        .rev()
        .collect();
    solve(&mut sigma, &mut pending)?;
    Ok(sigma)
}

pub fn unify_terms(s: &Term, t: &Term) -> Result<Substitution, UnifyError> {
    let mut sigma = Substitution::new();
    let mut pending = vec![(s.clone(), t.clone())];
    solve(&mut sigma, &mut pending)?;
    Ok(sigma)
}

/// Extends `sigma` so that it unifies every pending pair. `sigma` must be idempotent.
pub(crate) fn solve(
    sigma: &mut Substitution,
    pending: &mut Vec<(Term, Term)>,
) -> Result<(), UnifyError> {
    while let Some((s, t)) = pending.pop() {
        let s = sigma.apply(&s);
        let t = sigma.apply(&t);
        if s == t {
            continue;
        }
        match (s, t) {
            (Term::Var(v), other) | (other, Term::Var(v)) => {
                if other.occurs(v) {
                    return Err(UnifyError::OccursCheck);
                }
                *sigma = sigma.then(&Substitution::singleton(v, other));
            }
            (Term::App(f, xs), Term::App(g, ys)) => {
                if f != g || xs.len() != ys.len() {
                    return Err(UnifyError::Clash);
                }
                pending.extend(xs.into_iter().zip(ys).rev());
            }
        }
    }
    Ok(())
}

/// One-way matching: finds `s` with `s(pattern) == target`. Variables of
/// `target` are treated as constants, even when their ids coincide with
/// pattern variables.
pub fn match_atom(pattern: &Atom, target: &Atom) -> Option<Substitution> {
    if pattern.pred != target.pred || pattern.args.len() != target.args.len() {
        return None;
    }
    // identity bindings must be remembered while matching, so a plain map is used
    let mut bound = BTreeMap::new();
    for (p, t) in pattern.args.iter().zip(&target.args) {
        match_into(p, t, &mut bound)?;
    }
    Some(Substitution::from_pairs(bound))
}

fn match_into(pattern: &Term, target: &Term, bound: &mut BTreeMap<Var, Term>) -> Option<()> {
    match pattern {
        Term::Var(v) => match bound.get(v) {
            Some(prev) => (prev == target).then_some(()),
            None => {
                bound.insert(*v, target.clone());
                Some(())
            }
        },
        Term::App(f, ps) => match target {
            Term::App(g, ts) if f == g && ps.len() == ts.len() => {
                for (p, t) in ps.iter().zip(ts) {
                    match_into(p, t, bound)?;
                }
                Some(())
            }
            _ => None,
        },
    }
}
