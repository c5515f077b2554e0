use thiserror::Error;

use crate::logic::{unify, Clause, ClauseId, HasVars, Provenance};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReplayError {
    #[error("clause {0} is missing from the store")]
    Missing(ClauseId),
    #[error("clause {id}: {reason}")]
    Bad { id: ClauseId, reason: String },
    #[error("derivation does not end in the empty clause")]
    NotARefutation,
}

fn bad(id: ClauseId, reason: impl Into<String>) -> ReplayError {
    ReplayError::Bad {
        id,
        reason: reason.into(),
    }
}

fn lookup(store: &[Clause], id: ClauseId) -> Result<&Clause, ReplayError> {
    id.checked_sub(1)
        .and_then(|i| store.get(i))
        .filter(|c| c.id == id)
        .ok_or(ReplayError::Missing(id))
}

/// Recomputes a derived clause from its parents, re-running unification,
/// and checks the literals match exactly. Input clauses replay trivially.
pub fn replay_clause(store: &[Clause], c: &Clause) -> Result<(), ReplayError> {
    match &c.provenance {
        Provenance::Input => Ok(()),
        Provenance::Resolvent {
            left,
            right,
            left_pos,
            right_pos,
            renaming,
            unifier,
        } => {
            let l = lookup(store, *left)?;
            let r = lookup(store, *right)?;
            if !renaming.is_renaming() {
                return Err(bad(c.id, "renaming is not a variable renaming"));
            }
            let r = renaming.apply(r);
            let left_vars = l.vars();
            if r.vars().iter().any(|v| left_vars.contains(v)) {
                return Err(bad(c.id, "parents are not renamed apart"));
            }
            let (Some(a), Some(b)) = (l.literals.get(*left_pos), r.literals.get(*right_pos)) else {
                return Err(bad(c.id, "resolved position out of range"));
            };
            if a.positive == b.positive {
                return Err(bad(c.id, "resolved literals are not complementary"));
            }
            let mgu = unify(&a.atom, &b.atom)
                .map_err(|e| bad(c.id, format!("resolved atoms do not unify: {e}")))?;
            if &mgu != unifier {
                return Err(bad(
                    c.id,
                    format!("recorded unifier {unifier} differs from mgu {mgu}"),
                ));
            }
            let mut expected = mgu.apply(&l.without(*left_pos));
            expected.extend(mgu.apply(&r.without(*right_pos)));
            if expected != c.literals {
                return Err(bad(c.id, "resolvent literals differ"));
            }
            Ok(())
        }
        Provenance::Factor {
            parent,
            keep,
            drop,
            unifier,
        } => {
            let p = lookup(store, *parent)?;
            let (Some(a), Some(b)) = (p.literals.get(*keep), p.literals.get(*drop)) else {
                return Err(bad(c.id, "factored position out of range"));
            };
            if keep == drop || a.positive != b.positive {
                return Err(bad(
                    c.id,
                    "factored literals must be two literals of equal sign",
                ));
            }
            let mgu = unify(&a.atom, &b.atom)
                .map_err(|e| bad(c.id, format!("factored atoms do not unify: {e}")))?;
            if &mgu != unifier {
                return Err(bad(
                    c.id,
                    format!("recorded unifier {unifier} differs from mgu {mgu}"),
                ));
            }
            if mgu.apply(&p.without(*drop)) != c.literals {
                return Err(bad(c.id, "factor literals differ"));
            }
            Ok(())
        }
    }
}

/// Replays every clause of a derivation (ids in ascending order, the empty
/// clause last).
pub fn replay_derivation(store: &[Clause], ids: &[ClauseId]) -> Result<(), ReplayError> {
    for &id in ids {
        let c = lookup(store, id)?;
        for p in c.provenance.parents() {
            if !ids.contains(&p) {
                return Err(bad(id, format!("parent {p} is not part of the derivation")));
            }
        }
        replay_clause(store, c)?;
    }
    match ids.last() {
        Some(&last) if lookup(store, last)?.is_empty() => Ok(()),
        _ => Err(ReplayError::NotARefutation),
    }
}
