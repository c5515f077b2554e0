use std::fmt;

use thiserror::Error;

use crate::logic::Substitution;
use crate::rewrite::{Prop, RewriteSystem, Sign};

use super::proof::{ProofTree, Sequent, Witness};

/// Rejection of a proof: the child-index path from the root to the failing
/// node and the first condition that failed there.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("at {}: {reason}", fmt_node_path(.path))]
pub struct CheckError {
    pub path: Vec<usize>,
    pub reason: String,
}

fn fmt_node_path(path: &[usize]) -> String {
    if path.is_empty() {
        "root".to_string()
    } else {
        path.iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join(".")
    }
}

struct Arrow(Sign);

impl fmt::Display for Arrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self.0 {
            Sign::Plus => "→+*",
            Sign::Minus => "→-*",
        })
    }
}

/// Checks `proof` as a derivation of `goal` modulo `system`. Every side
/// condition is established by replaying its trace; no search happens.
pub fn check_proof(
    system: &RewriteSystem,
    goal: &Sequent,
    proof: &ProofTree,
) -> Result<(), CheckError> {
    Checker {
        system,
        path: Vec::new(),
    }
    .node(goal, proof)
}

struct Checker<'s> {
    system: &'s RewriteSystem,
    path: Vec<usize>,
}

fn without(side: &[Prop], index: usize) -> Vec<Prop> {
    let mut out = side.to_vec();
    out.remove(index);
    out
}

fn with(mut side: Vec<Prop>, extra: impl IntoIterator<Item = Prop>) -> Vec<Prop> {
    side.extend(extra);
    side
}

impl Checker<'_> {
    fn fail(&self, reason: impl Into<String>) -> CheckError {
        CheckError {
            path: self.path.clone(),
            reason: reason.into(),
        }
    }

    fn witness(&self, source: &Prop, sign: Sign, w: &Witness) -> Result<(), CheckError> {
        let arrow = Arrow(sign);
        match w.trace.replay(self.system, source, sign) {
            Ok(end) if end.alpha_eq(&w.target) => Ok(()),
            Ok(end) => Err(self.fail(format!(
                "{source} {arrow} {} not witnessed: trace ends at {end}",
                w.target
            ))),
            Err(e) => Err(self.fail(format!("{source} {arrow} {} not witnessed: {e}", w.target))),
        }
    }

    fn principal<'a>(
        &self,
        side: &'a [Prop],
        index: usize,
        which: &str,
    ) -> Result<&'a Prop, CheckError> {
        side.get(index).ok_or_else(|| {
            self.fail(format!(
                "{which} index {index} out of range ({} formulas)",
                side.len()
            ))
        })
    }

    fn child(&mut self, k: usize, goal: &Sequent, proof: &ProofTree) -> Result<(), CheckError> {
        self.path.push(k);
        let r = self.node(goal, proof);
        self.path.pop();
        r
    }

    fn node(&mut self, goal: &Sequent, proof: &ProofTree) -> Result<(), CheckError> {
        let (g, d) = (&goal.gamma, &goal.delta);
        match proof {
            ProofTree::Axiom { left, right } => {
                let ([a], [b]) = (g.as_slice(), d.as_slice()) else {
                    return Err(self.fail(format!(
                        "axiom needs exactly one formula on each side, got {goal}"
                    )));
                };
                if !left.target.is_atomic() {
                    return Err(self.fail(format!("axiom target {} is not atomic", left.target)));
                }
                if left.target != right.target {
                    return Err(self.fail(format!(
                        "axiom targets differ: {} and {}",
                        left.target, right.target
                    )));
                }
                self.witness(a, Sign::Minus, left)?;
                self.witness(b, Sign::Plus, right)
            }
            ProofTree::Cut {
                formula,
                neg,
                pos,
                left,
                right,
            } => {
                self.witness(formula, Sign::Minus, neg)?;
                self.witness(formula, Sign::Plus, pos)?;
                let l = Sequent::new(with(g.clone(), [neg.target.clone()]), d.clone());
                let r = Sequent::new(g.clone(), with(d.clone(), [pos.target.clone()]));
                self.child(0, &l, left)?;
                self.child(1, &r, right)
            }
            ProofTree::ContrLeft {
                index,
                first,
                second,
                premise,
            } => {
                let a = self.principal(g, *index, "left")?;
                self.witness(a, Sign::Minus, first)?;
                self.witness(a, Sign::Minus, second)?;
                let s = Sequent::new(
                    with(
                        without(g, *index),
                        [first.target.clone(), second.target.clone()],
                    ),
                    d.clone(),
                );
                self.child(0, &s, premise)
            }
            ProofTree::ContrRight {
                index,
                first,
                second,
                premise,
            } => {
                let a = self.principal(d, *index, "right")?;
                self.witness(a, Sign::Plus, first)?;
                self.witness(a, Sign::Plus, second)?;
                let s = Sequent::new(
                    g.clone(),
                    with(
                        without(d, *index),
                        [first.target.clone(), second.target.clone()],
                    ),
                );
                self.child(0, &s, premise)
            }
            ProofTree::WeakLeft { index, premise } => {
                self.principal(g, *index, "left")?;
                self.child(0, &Sequent::new(without(g, *index), d.clone()), premise)
            }
            ProofTree::WeakRight { index, premise } => {
                self.principal(d, *index, "right")?;
                self.child(0, &Sequent::new(g.clone(), without(d, *index)), premise)
            }
            ProofTree::BotLeft { index, witness } => {
                let a = self.principal(g, *index, "left")?;
                if witness.target != Prop::Falsum {
                    return Err(
                        self.fail(format!("bot-left target {} is not false", witness.target))
                    );
                }
                self.witness(a, Sign::Minus, witness)
            }
            ProofTree::NegLeft {
                index,
                witness,
                premise,
            } => {
                let a = self.principal(g, *index, "left")?;
                let Prop::Not(b) = &witness.target else {
                    return Err(self.fail(format!(
                        "neg-left target {} is not a negation",
                        witness.target
                    )));
                };
                self.witness(a, Sign::Minus, witness)?;
                let s = Sequent::new(without(g, *index), with(d.clone(), [(**b).clone()]));
                self.child(0, &s, premise)
            }
            ProofTree::NegRight {
                index,
                witness,
                premise,
            } => {
                let a = self.principal(d, *index, "right")?;
                let Prop::Not(b) = &witness.target else {
                    return Err(self.fail(format!(
                        "neg-right target {} is not a negation",
                        witness.target
                    )));
                };
                self.witness(a, Sign::Plus, witness)?;
                let s = Sequent::new(with(g.clone(), [(**b).clone()]), without(d, *index));
                self.child(0, &s, premise)
            }
            ProofTree::OrLeft {
                index,
                witness,
                left,
                right,
            } => {
                let a = self.principal(g, *index, "left")?;
                let Prop::Or(b, c) = &witness.target else {
                    return Err(self.fail(format!(
                        "or-left target {} is not a disjunction",
                        witness.target
                    )));
                };
                self.witness(a, Sign::Minus, witness)?;
                let rest = without(g, *index);
                self.child(
                    0,
                    &Sequent::new(with(rest.clone(), [(**b).clone()]), d.clone()),
                    left,
                )?;
                self.child(
                    1,
                    &Sequent::new(with(rest, [(**c).clone()]), d.clone()),
                    right,
                )
            }
            ProofTree::OrRight {
                index,
                witness,
                premise,
            } => {
                let a = self.principal(d, *index, "right")?;
                let Prop::Or(b, c) = &witness.target else {
                    return Err(self.fail(format!(
                        "or-right target {} is not a disjunction",
                        witness.target
                    )));
                };
                self.witness(a, Sign::Plus, witness)?;
                let s = Sequent::new(
                    g.clone(),
                    with(without(d, *index), [(**b).clone(), (**c).clone()]),
                );
                self.child(0, &s, premise)
            }
            ProofTree::ForallLeft {
                index,
                witness,
                var,
                body,
                term,
                instance,
                premise,
            } => {
                let a = self.principal(g, *index, "left")?;
                let quantified = Prop::forall(*var, body.clone());
                if !witness.target.alpha_eq(&quantified) {
                    return Err(self.fail(format!(
                        "forall-left target {} is not {quantified}",
                        witness.target
                    )));
                }
                self.witness(a, Sign::Minus, witness)?;
                let inst = Substitution::singleton(*var, term.clone()).apply(body);
                self.witness(&inst, Sign::Minus, instance)?;
                let s = Sequent::new(
                    with(without(g, *index), [instance.target.clone()]),
                    d.clone(),
                );
                self.child(0, &s, premise)
            }
            ProofTree::ForallRight {
                index,
                witness,
                var,
                body,
                premise,
            } => {
                let a = self.principal(d, *index, "right")?;
                let quantified = Prop::forall(*var, body.clone());
                if !witness.target.alpha_eq(&quantified) {
                    return Err(self.fail(format!(
                        "forall-right target {} is not {quantified}",
                        witness.target
                    )));
                }
                self.witness(a, Sign::Plus, witness)?;
                let rest_d = without(d, *index);
                let rest = Sequent::new(g.clone(), rest_d.clone());
                if rest.free_vars().contains(var) {
                    return Err(self.fail(format!("eigenvariable {var} is free in {rest}")));
                }
                let s = Sequent::new(g.clone(), with(rest_d, [body.clone()]));
                self.child(0, &s, premise)
            }
        }
    }
}
