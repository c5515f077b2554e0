use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::logic::{is_variant, subsumes, Clause, ClauseId, Term};

use super::infer::{factors, resolvents};
use super::policy::{Policy, SaturationError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SaturationConfig {
    /// Maximum number of inference conclusions.
    pub budget: usize,
    /// Forward subsumption; off by default.
    pub subsumption: bool,
}

impl SaturationConfig {
    pub fn with_budget(budget: usize) -> SaturationConfig {
        SaturationConfig {
            budget,
            subsumption: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// The empty clause was derived.
    Refuted { empty: ClauseId },
    /// Nothing new can be derived.
    Saturated,
    /// The budget ran out first.
    BudgetExhausted,
}

impl Outcome {
    pub fn label(&self) -> &'static str {
        match self {
            Outcome::Refuted { .. } => "REFUTED",
            Outcome::Saturated => "SATURATED",
            Outcome::BudgetExhausted => "BUDGET",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiscardReason {
    VariantOf(ClauseId),
    SubsumedBy(ClauseId),
}

/// What happened to each inference conclusion, in generation order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Event {
    Given(ClauseId),
    Kept {
        step: usize,
        id: ClauseId,
    },
    Discarded {
        step: usize,
        clause: Clause,
        reason: DiscardReason,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SaturationResult {
    pub outcome: Outcome,
    pub policy: Policy,
    /// Clause store; the clause with id `k` is at index `k - 1`.
    pub clauses: Vec<Clause>,
    pub inputs: usize,
    /// Clauses that were selected as given clause, in order.
    pub active: Vec<ClauseId>,
    pub events: Vec<Event>,
    pub generated: usize,
    pub kept: usize,
}

impl SaturationResult {
    pub fn clause(&self, id: ClauseId) -> Option<&Clause> {
        id.checked_sub(1).and_then(|i| self.clauses.get(i))
    }

    /// Derived clauses that were kept.
    pub fn derived(&self) -> &[Clause] {
        &self.clauses[self.inputs..]
    }

    /// Ids of every ancestor of the empty clause, the empty clause last.
    pub fn derivation(&self) -> Option<Vec<ClauseId>> {
        let Outcome::Refuted { empty } = self.outcome else {
            return None;
        };
        Some(ancestors(&self.clauses, empty))
    }

    /// Number of inferences actually performed (every conclusion counts).
    pub fn inferences(&self) -> usize {
        self.generated
    }
}

/// Ancestors of `id` (inclusive) in ascending id order.
pub fn ancestors(store: &[Clause], id: ClauseId) -> Vec<ClauseId> {
    let mut seen = BTreeSet::new();
    let mut stack = vec![id];
    while let Some(c) = stack.pop() {
        if seen.insert(c) {
            stack.extend(store[c - 1].provenance.parents());
        }
    }
    seen.into_iter().collect()
}

/// Variable-blind key: variants always share it.
fn shape_key(c: &Clause) -> Vec<String> {
    fn blank(t: &Term, out: &mut String) {
        match t {
            Term::Var(_) => out.push('_'),
            Term::App(f, args) => {
                out.push_str(f);
                out.push('(');
                for a in args {
                    blank(a, out);
                    out.push(',');
                }
                out.push(')');
            }
        }
    }
    let mut keys: Vec<String> = c
        .literals
        .iter()
        .map(|l| {
            let mut s = String::new();
            s.push(if l.positive { '+' } else { '-' });
            s.push_str(&l.atom.pred);
            for a in &l.atom.args {
                blank(a, &mut s);
                s.push(',');
            }
            s
        })
        .collect();
    keys.sort();
    keys
}

struct Store<'p> {
    policy: &'p Policy,
    config: SaturationConfig,
    clauses: Vec<Clause>,
    index: HashMap<Vec<String>, Vec<ClauseId>>,
    events: Vec<Event>,
    generated: usize,
    kept: usize,
}

enum Admit {
    Kept(ClauseId),
    Empty(ClauseId),
    Discarded,
    OutOfBudget,
}

impl Store<'_> {
    fn push(&mut self, mut c: Clause) -> ClauseId {
        c.id = self.clauses.len() + 1;
        let id = c.id;
        if !self.policy.is_restricted(&c) {
            self.index.entry(shape_key(&c)).or_default().push(id);
        }
        self.clauses.push(c);
        id
    }

    fn admit(&mut self, c: Clause) -> Admit {
        if self.generated >= self.config.budget {
            return Admit::OutOfBudget;
        }
        self.generated += 1;
        let step = self.generated;
        if c.is_empty() {
            let id = self.push(c);
            self.kept += 1;
            self.events.push(Event::Kept { step, id });
            return Admit::Empty(id);
        }
        if let Some(&other) = self.index.get(&shape_key(&c)).and_then(|ids| {
            ids.iter()
                .find(|&&id| is_variant(&self.clauses[id - 1], &c))
        }) {
            self.events.push(Event::Discarded {
                step,
                clause: c,
                reason: DiscardReason::VariantOf(other),
            });
            return Admit::Discarded;
        }
        if self.config.subsumption {
            if let Some(other) = self
                .clauses
                .iter()
                .find(|d| !self.policy.is_restricted(d) && subsumes(d, &c))
                .map(|d| d.id)
            {
                self.events.push(Event::Discarded {
                    step,
                    clause: c,
                    reason: DiscardReason::SubsumedBy(other),
                });
                return Admit::Discarded;
            }
        }
        let id = self.push(c);
        self.kept += 1;
        self.events.push(Event::Kept { step, id });
        Admit::Kept(id)
    }
}

/// Given-clause saturation. The oldest passive clause becomes the given
/// clause; it is resolved against every active clause (itself included) and
/// factored. Conclusions that are variants of an existing unrestricted clause
/// are dropped. Deterministic for a fixed input order.
pub fn saturate(
    problem: &[Clause],
    policy: &Policy,
    config: SaturationConfig,
) -> Result<SaturationResult, SaturationError> {
    if config.budget == 0 {
        return Err(SaturationError::ZeroBudget);
    }
    policy.validate(problem)?;

    let mut store = Store {
        policy,
        config,
        clauses: Vec::new(),
        index: HashMap::new(),
        events: Vec::new(),
        generated: 0,
        kept: 0,
    };
    let mut passive = VecDeque::new();
    let mut active: Vec<ClauseId> = Vec::new();
    let mut outcome = None;
    for c in problem {
        let id = store.push(c.clone());
        if c.is_empty() && outcome.is_none() {
            outcome = Some(Outcome::Refuted { empty: id });
        }
        passive.push_back(id);
    }

    'outer: while outcome.is_none() {
        let Some(given_id) = passive.pop_front() else {
            outcome = Some(Outcome::Saturated);
            break;
        };
        store.events.push(Event::Given(given_id));
        active.push(given_id);
        let given = store.clauses[given_id - 1].clone();

        let mut conclusions = Vec::new();
        for &other in &active {
            conclusions.extend(resolvents(&given, &store.clauses[other - 1], policy)?);
        }
        conclusions.extend(factors(&given, policy)?);

        for c in conclusions {
            match store.admit(c) {
                Admit::Kept(id) => passive.push_back(id),
                Admit::Discarded => {}
                Admit::Empty(id) => {
                    outcome = Some(Outcome::Refuted { empty: id });
                    break 'outer;
                }
                Admit::OutOfBudget => {
                    outcome = Some(Outcome::BudgetExhausted);
                    break 'outer;
                }
            }
        }
    }

    Ok(SaturationResult {
        outcome: outcome.expect("loop sets an outcome"),
        policy: policy.clone(),
        inputs: problem.len(),
        clauses: store.clauses,
        active,
        events: store.events,
        generated: store.generated,
        kept: store.kept,
    })
}

/// Re-runs every admissible inference among the active clauses and checks
/// that each conclusion is a variant of a stored unrestricted clause. Holds
/// for every `Saturated` result when subsumption is off.
pub fn verify_saturated(result: &SaturationResult) -> Result<(), SaturationError> {
    let policy = &result.policy;
    let known: Vec<&Clause> = result
        .clauses
        .iter()
        .filter(|c| !policy.is_restricted(c))
        .collect();
    for (k, &a) in result.active.iter().enumerate() {
        let ca = result.clause(a).expect("active ids are stored");
        let mut conclusions = factors(ca, policy)?;
        for &b in &result.active[..=k] {
            conclusions.extend(resolvents(ca, result.clause(b).expect("stored"), policy)?);
        }
        for c in conclusions {
            if !known.iter().any(|d| is_variant(d, &c)) {
                return Err(SaturationError::NotSaturated(c.to_string()));
            }
        }
    }
    Ok(())
}
