use std::collections::{HashMap, HashSet};

use crate::logic::{Substitution, Term, Var};
use crate::rewrite::{reachable, Prop, RewriteSystem, RewriteTrace, Sign};

use super::proof::{ProofTree, Sequent, Witness};

/// Bounds for [`cutfree_search`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Maximum height of the proof, counting a bundled weakening+axiom as one.
    pub depth: usize,
    /// Maximum rewrite steps per side condition.
    pub fuel: usize,
    /// Instantiation candidates for forall-left, besides the free variables
    /// of the sequent at hand.
    pub terms: Vec<Term>,
    /// Hard cap on expanded sequents.
    pub max_nodes: usize,
}

impl SearchConfig {
    pub fn new(depth: usize, fuel: usize) -> SearchConfig {
        SearchConfig {
            depth,
            fuel,
            terms: Vec::new(),
            max_nodes: 200_000,
        }
    }

    pub fn with_terms(mut self, terms: Vec<Term>) -> SearchConfig {
        self.terms = terms;
        self
    }
}

const REACH_CAP: usize = 64;

/// Bounded backward search for a cut-free proof of `goal`. Returns `None`
/// when no proof exists within the bounds.
pub fn cutfree_search(
    system: &RewriteSystem,
    goal: &Sequent,
    config: &SearchConfig,
) -> Option<ProofTree> {
    let mut s = Search {
        system,
        config,
        failed: HashMap::new(),
        on_path: HashSet::new(),
        expanded: 0,
    };
    s.prove(goal, config.depth).0
}

struct Search<'a> {
    system: &'a RewriteSystem,
    config: &'a SearchConfig,
    /// Canonical sequent to the largest depth at which it is known to fail.
    failed: HashMap<String, usize>,
    on_path: HashSet<String>,
    expanded: usize,
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

fn boxed(p: ProofTree) -> Box<ProofTree> {
    Box::new(p)
}

/// Weakens away everything except `gamma[i]` and `delta[j]`, then closes with `leaf`.
fn isolate(goal: &Sequent, mut i: usize, mut j: usize, leaf: ProofTree) -> ProofTree {
    let mut ops = Vec::new();
    let (mut g, mut d) = (goal.gamma.len(), goal.delta.len());
    while g > 1 {
        let k = if i == 0 { 1 } else { 0 };
        ops.push((true, k));
        if k < i {
            i -= 1;
        }
        g -= 1;
    }
    while d > 1 {
        let k = if j == 0 { 1 } else { 0 };
        ops.push((false, k));
        if k < j {
            j -= 1;
        }
        d -= 1;
    }
    ops.into_iter().rev().fold(leaf, |premise, (left, index)| {
        if left {
            ProofTree::WeakLeft {
                index,
                premise: boxed(premise),
            }
        } else {
            ProofTree::WeakRight {
                index,
                premise: boxed(premise),
            }
        }
    })
}

impl Search<'_> {
    fn reach(&self, p: &Prop, sign: Sign) -> Vec<(Prop, RewriteTrace)> {
        reachable(self.system, p, sign, self.config.fuel, REACH_CAP)
    }

    /// The proof, if any, and whether the answer depended on loop pruning.
    fn prove(&mut self, goal: &Sequent, depth: usize) -> (Option<ProofTree>, bool) {
        if depth == 0 {
            return (None, false);
        }
        let key = goal.canonical_key();
        if self.failed.get(&key).is_some_and(|&d| d >= depth) {
            return (None, false);
        }
        if self.on_path.contains(&key) || self.expanded >= self.config.max_nodes {
            return (None, true);
        }
        self.expanded += 1;
        self.on_path.insert(key.clone());
        let (found, tainted) = self.expand(goal, depth);
        self.on_path.remove(&key);
        if found.is_none() && !tainted {
            let d = self.failed.entry(key).or_insert(0);
            *d = (*d).max(depth);
        }
        (found, tainted)
    }

    fn expand(&mut self, goal: &Sequent, depth: usize) -> (Option<ProofTree>, bool) {
        let left: Vec<Vec<(Prop, RewriteTrace)>> = goal
            .gamma
            .iter()
            .map(|a| self.reach(a, Sign::Minus))
            .collect();
        let right: Vec<Vec<(Prop, RewriteTrace)>> = goal
            .delta
            .iter()
            .map(|b| self.reach(b, Sign::Plus))
            .collect();

        for (i, ls) in left.iter().enumerate() {
            if let Some((p, t)) = ls.iter().find(|(p, _)| *p == Prop::Falsum) {
                return (
                    Some(ProofTree::BotLeft {
                        index: i,
                        witness: Witness::new(p.clone(), t.clone()),
                    }),
                    false,
                );
            }
        }
        for (i, ls) in left.iter().enumerate() {
            for (j, rs) in right.iter().enumerate() {
                for (p, lt) in ls.iter().filter(|(p, _)| p.is_atomic()) {
                    if let Some((_, rt)) = rs.iter().find(|(q, _)| q == p) {
                        let leaf = ProofTree::Axiom {
                            left: Witness::new(p.clone(), lt.clone()),
                            right: Witness::new(p.clone(), rt.clone()),
                        };
                        return (Some(isolate(goal, i, j, leaf)), false);
                    }
                }
            }
        }

        let mut tainted = false;
        let next = depth - 1;
        macro_rules! attempt {
            ($seq:expr, $build:expr) => {{
                let (found, t) = self.prove(&$seq, next);
                tainted |= t;
                if let Some(p) = found {
                    return (Some($build(p)), tainted);
                }
            }};
        }

        // Invertible-ish rules first: they never lose provability.
        for (j, rs) in right.iter().enumerate() {
            for (b, t) in rs {
                let w = || Witness::new(b.clone(), t.clone());
                match b {
                    Prop::Or(c, e) => attempt!(
                        Sequent::new(
                            goal.gamma.clone(),
                            with(without(&goal.delta, j), [(**c).clone(), (**e).clone()])
                        ),
                        |p| ProofTree::OrRight {
                            index: j,
                            witness: w(),
                            premise: boxed(p)
                        }
                    ),
                    Prop::Not(c) => attempt!(
                        Sequent::new(
                            with(goal.gamma.clone(), [(**c).clone()]),
                            without(&goal.delta, j)
                        ),
                        |p| ProofTree::NegRight {
                            index: j,
                            witness: w(),
                            premise: boxed(p)
                        }
                    ),
                    Prop::Forall(x, body) => {
                        let y = Var(goal.max_var().max(b.max_var()).map_or(0, |m| m + 1));
                        let body = Substitution::singleton(*x, Term::Var(y)).apply(&**body);
                        attempt!(
                            Sequent::new(
                                goal.gamma.clone(),
                                with(without(&goal.delta, j), [body.clone()])
                            ),
                            |p| ProofTree::ForallRight {
                                index: j,
                                witness: w(),
                                var: y,
                                body: body.clone(),
                                premise: boxed(p)
                            }
                        )
                    }
                    _ => {}
                }
            }
        }
        for (i, ls) in left.iter().enumerate() {
            for (b, t) in ls {
                let w = || Witness::new(b.clone(), t.clone());
                match b {
                    Prop::Not(c) => attempt!(
                        Sequent::new(
                            without(&goal.gamma, i),
                            with(goal.delta.clone(), [(**c).clone()])
                        ),
                        |p| ProofTree::NegLeft {
                            index: i,
                            witness: w(),
                            premise: boxed(p)
                        }
                    ),
                    Prop::Or(c, e) => {
                        let rest = without(&goal.gamma, i);
                        let (l, t1) = self.prove(
                            &Sequent::new(with(rest.clone(), [(**c).clone()]), goal.delta.clone()),
                            next,
                        );
                        tainted |= t1;
                        if let Some(l) = l {
                            let (r, t2) = self.prove(
                                &Sequent::new(with(rest, [(**e).clone()]), goal.delta.clone()),
                                next,
                            );
                            tainted |= t2;
                            if let Some(r) = r {
                                let proof = ProofTree::OrLeft {
                                    index: i,
                                    witness: w(),
                                    left: boxed(l),
                                    right: boxed(r),
                                };
                                return (Some(proof), tainted);
                            }
                        }
                    }
                    Prop::Forall(x, body) => {
                        for term in self.instances(goal) {
                            let inst = Substitution::singleton(*x, term.clone()).apply(&**body);
                            attempt!(
                                Sequent::new(
                                    with(without(&goal.gamma, i), [inst.clone()]),
                                    goal.delta.clone()
                                ),
                                |p| ProofTree::ForallLeft {
                                    index: i,
                                    witness: w(),
                                    var: *x,
                                    body: (**body).clone(),
                                    term: term.clone(),
                                    instance: Witness::refl(inst.clone()),
                                    premise: boxed(p)
                                }
                            )
                        }
                    }
                    _ => {}
                }
            }
        }

        // Contraction, only when the residues are not both the formula itself.
        for (i, ls) in left.iter().enumerate() {
            let a = &goal.gamma[i];
            for (k, (b, tb)) in ls.iter().enumerate() {
                for (c, tc) in &ls[k..] {
                    if b == a && c == a {
                        continue;
                    }
                    attempt!(
                        Sequent::new(
                            with(without(&goal.gamma, i), [b.clone(), c.clone()]),
                            goal.delta.clone()
                        ),
                        |p| ProofTree::ContrLeft {
                            index: i,
                            first: Witness::new(b.clone(), tb.clone()),
                            second: Witness::new(c.clone(), tc.clone()),
                            premise: boxed(p)
                        }
                    );
                }
            }
        }
        for (j, rs) in right.iter().enumerate() {
            let a = &goal.delta[j];
            for (k, (b, tb)) in rs.iter().enumerate() {
                for (c, tc) in &rs[k..] {
                    if b == a && c == a {
                        continue;
                    }
                    attempt!(
                        Sequent::new(
                            goal.gamma.clone(),
                            with(without(&goal.delta, j), [b.clone(), c.clone()])
                        ),
                        |p| ProofTree::ContrRight {
                            index: j,
                            first: Witness::new(b.clone(), tb.clone()),
                            second: Witness::new(c.clone(), tc.clone()),
                            premise: boxed(p)
                        }
                    );
                }
            }
        }
        (None, tainted)
    }

    fn instances(&self, goal: &Sequent) -> Vec<Term> {
        let mut out = self.config.terms.clone();
        for v in goal.free_vars() {
            let t = Term::Var(v);
            if !out.contains(&t) {
                out.push(t);
            }
        }
        if out.is_empty() {
            out.push(Term::Var(Var(goal.max_var().map_or(0, |m| m + 1))));
        }
        out
    }
}
