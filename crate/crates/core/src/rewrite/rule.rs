use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::logic::{unify, Atom, Clause, HasVars, Literal, Substitution, Term, Var};

use super::prop::{Prop, Sign};

/// 1-based position of a rule in its [`RewriteSystem`].
pub type RuleId = usize;

/// `lhs →sign rhs`. Free variables of `rhs` are among those of `lhs`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolarizedRule {
    pub id: RuleId,
    pub sign: Sign,
    pub lhs: Atom,
    pub rhs: Prop,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RuleError {
    #[error("clause {0} is not a one-way clause")]
    NotOneWay(usize),
    #[error("rule {id}: right-hand side has free variable {var} not bound by the left-hand side")]
    UnboundVariable { id: RuleId, var: Var },
}

impl PolarizedRule {
    pub fn new(id: RuleId, sign: Sign, lhs: Atom, rhs: Prop) -> Result<PolarizedRule, RuleError> {
        let lhs_vars = lhs.vars();
        if let Some(var) = rhs.free_vars().into_iter().find(|v| !lhs_vars.contains(v)) {
            return Err(RuleError::UnboundVariable { id, var });
        }
        Ok(PolarizedRule { id, sign, lhs, rhs })
    }

    /// Same rule up to renaming of the variables (lhs variables renamed
    /// consistently, bound variables up to alpha).
    pub fn is_variant_of(&self, other: &PolarizedRule) -> bool {
        if self.sign != other.sign {
            return false;
        }
        let (Some(fwd), Some(bwd)) = (
            crate::logic::match_atom(&self.lhs, &other.lhs),
            crate::logic::match_atom(&other.lhs, &self.lhs),
        ) else {
            return false;
        };
        if !fwd.is_renaming() || !bwd.is_renaming() {
            return false;
        }
        fwd.apply(&self.rhs).alpha_eq(&other.rhs)
    }
}

impl fmt::Display for PolarizedRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rule{} {} -> {}.", self.sign, self.lhs, self.rhs)
    }
}

/// Ordered set of rules; ids are positions starting at 1.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RewriteSystem {
    rules: Vec<PolarizedRule>,
}

impl RewriteSystem {
    pub fn new() -> RewriteSystem {
        RewriteSystem::default()
    }

    /// Adds a rule, renumbering it to the next free id.
    pub fn push(&mut self, mut rule: PolarizedRule) -> RuleId {
        rule.id = self.rules.len() + 1;
        self.rules.push(rule);
        self.rules.len()
    }

    pub fn from_rules(rules: impl IntoIterator<Item = PolarizedRule>) -> RewriteSystem {
        let mut sys = RewriteSystem::new();
        rules.into_iter().for_each(|r| {
            sys.push(r);
        });
        sys
    }

    pub fn get(&self, id: RuleId) -> Option<&PolarizedRule> {
        id.checked_sub(1).and_then(|i| self.rules.get(i))
    }

    pub fn rules(&self) -> &[PolarizedRule] {
        &self.rules
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }
}

fn literal_prop(l: &Literal) -> Prop {
    let a = Prop::Atom(l.atom.clone());
    if l.positive {
        a
    } else {
        Prop::not(a)
    }
}

/// The rewrite rule of a one-way clause `L, C1, ..., Cp` with `L` selected:
/// `P →- ∀x̄ (C1 ∨ ... ∨ Cp)` when `L = ¬P`, `P →+ ¬∀x̄ (C1 ∨ ... ∨ Cp)`
/// when `L = P`, where `x̄` are the variables of the `Ci` not in `P`, in order
/// of first occurrence. The disjunction nests to the right and an empty
/// rest becomes `⊥`.
pub fn clause_to_rule(c: &Clause, id: RuleId) -> Result<PolarizedRule, RuleError> {
    let selected = c.selected().ok_or(RuleError::NotOneWay(c.id))?;
    let head = &c.literals[selected];
    let rest = c.without(selected);
    let head_vars = head.atom.vars();
    let extra: Vec<Var> = rest
        .vars()
        .into_iter()
        .filter(|v| !head_vars.contains(v))
        .collect();

    let mut body = match rest.split_last() {
        None => Prop::Falsum,
        Some((last, init)) => init
            .iter()
            .rev()
            .fold(literal_prop(last), |acc, l| Prop::or(literal_prop(l), acc)),
    };
    for v in extra.into_iter().rev() {
        body = Prop::forall(v, body);
    }
    let (sign, rhs) = if head.positive {
        (Sign::Plus, Prop::not(body))
    } else {
        (Sign::Minus, body)
    };
    PolarizedRule::new(id, sign, head.atom.clone(), rhs)
}

/// Translates every one-way clause, in order.
pub fn theory_rules<'a>(clauses: impl IntoIterator<Item = &'a Clause>) -> RewriteSystem {
    let mut sys = RewriteSystem::new();
    for c in clauses {
        if let Ok(rule) = clause_to_rule(c, sys.len() + 1) {
            sys.push(rule);
        }
    }
    sys
}

/// True iff no left-hand side of a negative rule unifies with a left-hand
/// side of a positive rule.
pub fn check_disjoint_criterion(rules: &[PolarizedRule]) -> bool {
    let (neg, pos): (Vec<_>, Vec<_>) = rules.iter().partition(|r| r.sign == Sign::Minus);
    for n in &neg {
        let shift = n.lhs.vars().iter().map(|v| v.0 + 1).max().unwrap_or(0);
        for p in &pos {
            let renamed = shift_vars(&p.lhs, shift);
            if unify(&n.lhs, &renamed).is_ok() {
                return false;
            }
        }
    }
    true
}

fn shift_vars(a: &Atom, by: u32) -> Atom {
    let s = Substitution::from_pairs(a.vars().into_iter().map(|v| (v, Term::Var(Var(v.0 + by)))));
    s.apply(a)
}

/// Left-hand sides shared by a positive and a negative rule, for diagnostics.
pub fn overlapping_heads(rules: &[PolarizedRule]) -> BTreeSet<(RuleId, RuleId)> {
    let mut out = BTreeSet::new();
    for n in rules.iter().filter(|r| r.sign == Sign::Minus) {
        let shift = n.lhs.vars().iter().map(|v| v.0 + 1).max().unwrap_or(0);
        for p in rules.iter().filter(|r| r.sign == Sign::Plus) {
            if unify(&n.lhs, &shift_vars(&p.lhs, shift)).is_ok() {
                out.insert((n.id, p.id));
            }
        }
    }
    out
}
