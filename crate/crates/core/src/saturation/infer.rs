use crate::logic::{renaming_apart, unify, Clause, Literal, Provenance, Role, Substitution};
use crate::ordering::{is_maximal, is_strictly_maximal};

use super::policy::{Policy, SaturationError};

/// Binary resolvents of `left` and `right` admitted by `policy`. `right` is
/// renamed apart from `left` first, so the two may share variables (or be
/// the same clause). Returned clauses have id 0 until a store numbers them.
pub fn resolvents(
    left: &Clause,
    right: &Clause,
    policy: &Policy,
) -> Result<Vec<Clause>, SaturationError> {
    let clash = |l: &Literal, r: &Literal| l.positive != r.positive && l.atom.pred == r.atom.pred;
    if !left
        .literals
        .iter()
        .any(|l| right.literals.iter().any(|r| clash(l, r)))
    {
        return Ok(Vec::new());
    }
    let renaming = renaming_apart(right, &left.var_set());
    let renamed = renaming.apply(right);
    let mut out = Vec::new();
    for (i, l) in left.literals.iter().enumerate() {
        for (j, r) in renamed.literals.iter().enumerate() {
            if !clash(l, r) {
                continue;
            }
            let Ok(unifier) = unify(&l.atom, &r.atom) else {
                continue;
            };
            if !admits_resolution(policy, left, i, &renamed, j, &unifier)? {
                continue;
            }
            let mut literals = unifier.apply(&left.without(i));
            literals.extend(unifier.apply(&renamed.without(j)));
            out.push(Clause {
                id: 0,
                literals,
                role: Role::Ordinary,
                provenance: Provenance::Resolvent {
                    left: left.id,
                    right: right.id,
                    left_pos: i,
                    right_pos: j,
                    renaming: renaming.clone(),
                    unifier,
                },
            });
        }
    }
    Ok(out)
}

fn admits_resolution(
    policy: &Policy,
    left: &Clause,
    i: usize,
    right: &Clause,
    j: usize,
    unifier: &Substitution,
) -> Result<bool, SaturationError> {
    Ok(match policy {
        Policy::Plain => true,
        Policy::SetOfSupport { theory } => {
            !(theory.contains(&left.id) && theory.contains(&right.id))
        }
        Policy::Prm => match (left.selected(), right.selected()) {
            (Some(_), Some(_)) => false,
            (Some(s), None) => s == i,
            (None, Some(s)) => s == j,
            (None, None) => true,
        },
        Policy::OrderedSelection {
            precedence,
            selection,
        } => {
            let ((pos, pi), (neg, ni)) = if left.literals[i].positive {
                ((left, i), (right, j))
            } else {
                ((right, j), (left, i))
            };
            if !selection.selected_positions(pos)?.is_empty() {
                return Ok(false);
            }
            if !is_strictly_maximal(pi, &unifier.apply(&pos.literals), precedence)? {
                return Ok(false);
            }
            let neg_selected = selection.selected_positions(neg)?;
            if neg_selected.is_empty() {
                is_maximal(ni, &unifier.apply(&neg.literals), precedence)?
            } else {
                neg_selected.contains(&ni)
            }
        }
    })
}

/// Binary factors of `c` admitted by `policy`: two literals of equal polarity
/// are unified and the later copy dropped.
pub fn factors(c: &Clause, policy: &Policy) -> Result<Vec<Clause>, SaturationError> {
    match policy {
        Policy::Prm if c.is_one_way() => return Ok(Vec::new()),
        Policy::SetOfSupport { theory } if theory.contains(&c.id) => return Ok(Vec::new()),
        _ => {}
    }
    let mut out = Vec::new();
    for i in 0..c.len() {
        for j in i + 1..c.len() {
            let (a, b): (&Literal, &Literal) = (&c.literals[i], &c.literals[j]);
            if a.positive != b.positive || a.atom.pred != b.atom.pred {
                continue;
            }
            let Ok(unifier) = unify(&a.atom, &b.atom) else {
                continue;
            };
            if let Policy::OrderedSelection {
                precedence,
                selection,
            } = policy
            {
                if !a.positive || !selection.selected_positions(c)?.is_empty() {
                    continue;
                }
                if !is_maximal(i, &unifier.apply(&c.literals), precedence)? {
                    continue;
                }
            }
            out.push(Clause {
                id: 0,
                literals: unifier.apply(&c.without(j)),
                role: Role::Ordinary,
                provenance: Provenance::Factor {
                    parent: c.id,
                    keep: i,
                    drop: j,
                    unifier,
                },
            });
        }
    }
    Ok(out)
}
