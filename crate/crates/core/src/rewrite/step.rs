use std::collections::{HashSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::logic::{match_atom, Substitution};

use super::prop::{Path, Prop, Sign};
use super::rule::{PolarizedRule, RewriteSystem, RuleId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RewriteError {
    #[error("no subformula at position {0:?}")]
    InvalidPath(Path),
    #[error("subformula at position {0:?} is not atomic")]
    NotAtomic(Path),
    #[error("occurrence has polarity {occurrence} but rule {rule} has sign {rule_sign}")]
    PolarityMismatch {
        rule: RuleId,
        occurrence: Sign,
        rule_sign: Sign,
    },
    #[error("rule {0} does not match the atom")]
    NoMatch(RuleId),
    #[error("unknown rule {0}")]
    UnknownRule(RuleId),
    #[error("step {step}: recorded substitution {recorded} differs from the matcher {actual}")]
    WrongSubstitution {
        step: usize,
        recorded: Substitution,
        actual: Substitution,
    },
    #[error("step {step}: {source}")]
    AtStep {
        step: usize,
        source: Box<RewriteError>,
    },
}

/// One rewrite: rule `rule` applied at `path` with matching substitution `subst`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RewriteStep {
    pub path: Path,
    pub rule: RuleId,
    pub subst: Substitution,
}

/// A replayable witness for `A →±* B`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RewriteTrace {
    pub steps: Vec<RewriteStep>,
}

impl RewriteTrace {
    pub fn empty() -> RewriteTrace {
        RewriteTrace::default()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Replays the steps from `source`; fails at the first step that does not
    /// apply or whose recorded substitution is not the matcher.
    pub fn replay(
        &self,
        system: &RewriteSystem,
        source: &Prop,
        start: Sign,
    ) -> Result<Prop, RewriteError> {
        let mut current = source.clone();
        for (i, step) in self.steps.iter().enumerate() {
            let rule = system
                .get(step.rule)
                .ok_or(RewriteError::UnknownRule(step.rule))?;
            let (next, matcher) = rewrite_step(&current, start, rule, &step.path).map_err(|e| {
                RewriteError::AtStep {
                    step: i,
                    source: Box::new(e),
                }
            })?;
            if matcher != step.subst {
                return Err(RewriteError::WrongSubstitution {
                    step: i,
                    recorded: step.subst.clone(),
                    actual: matcher,
                });
            }
            current = next;
        }
        Ok(current)
    }
}

pub fn format_path(path: &[usize]) -> String {
    if path.is_empty() {
        ".".to_string()
    } else {
        path.iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join(".")
    }
}

impl fmt::Display for RewriteStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(step pos={} rule={} sub={})",
            format_path(&self.path),
            self.rule,
            self.subst
        )
    }
}

impl fmt::Display for RewriteTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(trace")?;
        for s in &self.steps {
            write!(f, " {s}")?;
        }
        f.write_str(")")
    }
}

/// Sign of the occurrence at `path` in `p` when `p` itself has sign `start`.
pub fn occurrence_polarity(p: &Prop, path: &[usize], start: Sign) -> Result<Sign, RewriteError> {
    p.polarity_at(path, start)
        .ok_or_else(|| RewriteError::InvalidPath(path.to_vec()))
}

/// Rewrites the atom at `path` with `rule`. Succeeds only if the occurrence
/// polarity equals the rule's sign and the rule's left-hand side matches.
/// Returns the new formula and the matching substitution.
pub fn rewrite_step(
    p: &Prop,
    start: Sign,
    rule: &PolarizedRule,
    path: &[usize],
) -> Result<(Prop, Substitution), RewriteError> {
    let sub = p
        .at(path)
        .ok_or_else(|| RewriteError::InvalidPath(path.to_vec()))?;
    let Prop::Atom(atom) = sub else {
        return Err(RewriteError::NotAtomic(path.to_vec()));
    };
    let occurrence = occurrence_polarity(p, path, start)?;
    if occurrence != rule.sign {
        return Err(RewriteError::PolarityMismatch {
            rule: rule.id,
            occurrence,
            rule_sign: rule.sign,
        });
    }
    let matcher = match_atom(&rule.lhs, atom).ok_or(RewriteError::NoMatch(rule.id))?;
    let replacement = matcher.apply(&rule.rhs);
    let out = p.replace_at(path, replacement).expect("path was validated");
    Ok((out, matcher))
}

/// Every one-step rewrite of `p`, in position order then rule order.
pub fn successors(system: &RewriteSystem, p: &Prop, start: Sign) -> Vec<(Prop, RewriteStep)> {
    let mut out = Vec::new();
    for (path, sign, _) in p.atomic_positions(start) {
        for rule in system.rules().iter().filter(|r| r.sign == sign) {
            if let Ok((next, subst)) = rewrite_step(p, start, rule, &path) {
                out.push((
                    next,
                    RewriteStep {
                        path: path.clone(),
                        rule: rule.id,
                        subst,
                    },
                ));
            }
        }
    }
    out
}

/// Breadth-first search for a trace from `a` to `b` (up to bound variable
/// names) of at most `fuel` steps.
pub fn rewrites_to(
    system: &RewriteSystem,
    a: &Prop,
    start: Sign,
    b: &Prop,
    fuel: usize,
) -> Option<RewriteTrace> {
    bfs(system, a, start, fuel, usize::MAX, |p| p.alpha_eq(b))
        .into_iter()
        .next()
        .map(|(_, t)| t)
}

/// Everything reachable from `a` within `fuel` steps, `a` itself first, each
/// with the trace of a shortest derivation. At most `cap` formulas.
pub fn reachable(
    system: &RewriteSystem,
    a: &Prop,
    start: Sign,
    fuel: usize,
    cap: usize,
) -> Vec<(Prop, RewriteTrace)> {
    bfs(system, a, start, fuel, cap, |_| true)
}

fn bfs(
    system: &RewriteSystem,
    a: &Prop,
    start: Sign,
    fuel: usize,
    cap: usize,
    mut keep: impl FnMut(&Prop) -> bool,
) -> Vec<(Prop, RewriteTrace)> {
    let mut out = Vec::new();
    let mut seen: HashSet<Prop> = HashSet::from([a.clone()]);
    let mut queue = VecDeque::from([(a.clone(), RewriteTrace::empty())]);
    while let Some((p, trace)) = queue.pop_front() {
        if keep(&p) {
            out.push((p.clone(), trace.clone()));
            if out.len() >= cap {
                break;
            }
        }
        if trace.len() >= fuel {
            continue;
        }
        for (next, step) in successors(system, &p, start) {
            if seen.insert(next.clone()) {
                let mut t = trace.clone();
                t.steps.push(step);
                queue.push_back((next, t));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::{Atom, Term, Var};

    fn at(n: &str) -> Prop {
        Prop::Atom(Atom::prop(n))
    }

    /// {P ->- Q, P ->+ ~Q}
    fn cut_system() -> RewriteSystem {
        RewriteSystem::from_rules([
            PolarizedRule::new(0, Sign::Minus, Atom::prop("P"), at("Q")).unwrap(),
            PolarizedRule::new(0, Sign::Plus, Atom::prop("P"), Prop::not(at("Q"))).unwrap(),
        ])
    }

    #[test]
    fn negative_rule_at_negative_root() {
        let sys = cut_system();
        let (out, s) = rewrite_step(&at("P"), Sign::Minus, sys.get(1).unwrap(), &[]).unwrap();
        assert_eq!(out, at("Q"));
        assert!(s.is_empty());
    }

    #[test]
    fn negation_admits_positive_rule_inside() {
        let sys = cut_system();
        let (out, _) =
            rewrite_step(&Prop::not(at("P")), Sign::Minus, sys.get(2).unwrap(), &[0]).unwrap();
        assert_eq!(out, Prop::not(Prop::not(at("Q"))));
        // and the negative rule is refused there
        let err =
            rewrite_step(&Prop::not(at("P")), Sign::Minus, sys.get(1).unwrap(), &[0]).unwrap_err();
        assert!(matches!(err, RewriteError::PolarityMismatch { .. }));
    }

    #[test]
    fn polarity_mismatch_at_root() {
        let sys = RewriteSystem::from_rules([cut_system().get(1).unwrap().clone()]);
        assert!(matches!(
            rewrite_step(&at("P"), Sign::Plus, sys.get(1).unwrap(), &[]),
            Err(RewriteError::PolarityMismatch { .. })
        ));
        assert_eq!(rewrites_to(&sys, &at("P"), Sign::Plus, &at("Q"), 5), None);
    }

    #[test]
    fn closure_search() {
        let sys = cut_system();
        let t = rewrites_to(&sys, &at("P"), Sign::Minus, &at("Q"), 1).unwrap();
        assert_eq!(t.len(), 1);
        let t = rewrites_to(&sys, &at("P"), Sign::Plus, &Prop::not(at("Q")), 1).unwrap();
        assert_eq!(
            t.replay(&sys, &at("P"), Sign::Plus).unwrap(),
            Prop::not(at("Q"))
        );
        let refl = rewrites_to(&sys, &at("R"), Sign::Plus, &at("R"), 0).unwrap();
        assert!(refl.is_empty());
        assert_eq!(rewrites_to(&sys, &at("P"), Sign::Minus, &at("Q"), 0), None);
    }

    #[test]
    fn matcher_instantiates_rhs() {
        // E(s(X0)) ->- forall X1. R(X0, X1)
        let v = Term::var;
        let rule = PolarizedRule::new(
            1,
            Sign::Minus,
            Atom::new("E", vec![Term::app("s", vec![v(0)])]),
            Prop::forall(Var(1), Prop::Atom(Atom::new("R", vec![v(0), v(1)]))),
        )
        .unwrap();
        // target mentions X1 free: E(s(X1)) must not be captured
        let target = Prop::Atom(Atom::new("E", vec![Term::app("s", vec![v(1)])]));
        let (out, s) = rewrite_step(&target, Sign::Minus, &rule, &[]).unwrap();
        assert_eq!(s, crate::logic::Substitution::singleton(Var(0), v(1)));
        assert_eq!(out.free_vars(), vec![Var(1)]);
        let Prop::Forall(b, _) = out else { panic!() };
        assert_ne!(b, Var(1));
    }

    #[test]
    fn replay_rejects_wrong_substitution() {
        let sys = cut_system();
        let mut t = rewrites_to(&sys, &at("P"), Sign::Minus, &at("Q"), 1).unwrap();
        t.steps[0].subst = crate::logic::Substitution::singleton(Var(0), Term::constant("a"));
        assert!(matches!(
            t.replay(&sys, &at("P"), Sign::Minus),
            Err(RewriteError::WrongSubstitution { .. })
        ));
    }
}
