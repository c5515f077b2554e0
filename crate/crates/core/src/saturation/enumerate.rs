use std::collections::BTreeMap;

use crate::logic::{Clause, ClauseId, Provenance};

use super::engine::ancestors;
use super::infer::{factors, resolvents};
use super::policy::Policy;

/// Levels explored by [`enumerate_refutations`].
pub const DEFAULT_MAX_LEVEL: usize = 6;
/// Stored-clause cap for [`enumerate_refutations`].
pub const DEFAULT_MAX_NODES: usize = 5_000;

/// A refutation as a self-contained clause store: the input clauses keep
/// ids `1..=n`, the derived clauses of the DAG follow, the empty clause last.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Refutation {
    pub clauses: Vec<Clause>,
    pub inputs: usize,
}

/// One inference of a refutation, identified by what it consumed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StepKey {
    Resolve {
        left: String,
        right: String,
        left_pos: usize,
        right_pos: usize,
    },
    Factor {
        parent: String,
        keep: usize,
        drop: usize,
    },
}

impl Refutation {
    pub fn derived(&self) -> &[Clause] {
        &self.clauses[self.inputs..]
    }

    pub fn ids(&self) -> Vec<ClauseId> {
        ancestors(&self.clauses, self.clauses.len())
    }

    /// The inference steps, each keyed by the full derivation of its premises,
    /// so two refutations are the same DAG iff their step sets are equal.
    pub fn steps(&self) -> Vec<StepKey> {
        let mut keys: Vec<StepKey> = self
            .derived()
            .iter()
            .map(|c| step_key(&self.clauses, c))
            .collect();
        keys.sort();
        keys
    }
}

fn signature(store: &[Clause], id: ClauseId) -> String {
    let c = &store[id - 1];
    match &c.provenance {
        Provenance::Input => format!("#{id}"),
        Provenance::Resolvent {
            left,
            right,
            left_pos,
            right_pos,
            ..
        } => format!(
            "res({},{left_pos},{},{right_pos})",
            signature(store, *left),
            signature(store, *right)
        ),
        Provenance::Factor {
            parent, keep, drop, ..
        } => {
            format!("fac({},{keep},{drop})", signature(store, *parent))
        }
    }
}

fn step_key(store: &[Clause], c: &Clause) -> StepKey {
    match &c.provenance {
        Provenance::Resolvent {
            left,
            right,
            left_pos,
            right_pos,
            ..
        } => StepKey::Resolve {
            left: signature(store, *left),
            right: signature(store, *right),
            left_pos: *left_pos,
            right_pos: *right_pos,
        },
        Provenance::Factor {
            parent, keep, drop, ..
        } => StepKey::Factor {
            parent: signature(store, *parent),
            keep: *keep,
            drop: *drop,
        },
        Provenance::Input => unreachable!("derived clauses only"),
    }
}

/// Breadth-first enumeration of distinct refutations under plain resolution.
/// Every inference is kept as its own node (no variant deletion), so each
/// way of reaching the empty clause shows up separately. Stops after
/// `limit` refutations, [`DEFAULT_MAX_LEVEL`] levels or
/// [`DEFAULT_MAX_NODES`] clauses.
pub fn enumerate_refutations(problem: &[Clause], limit: usize) -> Vec<Refutation> {
    enumerate_refutations_within(problem, limit, DEFAULT_MAX_LEVEL, DEFAULT_MAX_NODES)
}

pub fn enumerate_refutations_within(
    problem: &[Clause],
    limit: usize,
    max_level: usize,
    max_nodes: usize,
) -> Vec<Refutation> {
    let mut store: Vec<Clause> = Vec::new();
    let mut level: Vec<usize> = Vec::new();
    let mut found = Vec::new();
    for (i, c) in problem.iter().enumerate() {
        let mut c = c.clone();
        c.id = i + 1;
        c.provenance = Provenance::Input;
        store.push(c);
        level.push(0);
    }
    if limit == 0 {
        return found;
    }
    for input in store.iter().filter(|c| c.is_empty()) {
        found.push(extract(&store, problem.len(), input.id));
        if found.len() >= limit {
            return found;
        }
    }

    for k in 1..=max_level {
        let frontier: Vec<ClauseId> = store
            .iter()
            .filter(|c| level[c.id - 1] == k - 1 && !c.is_empty())
            .map(|c| c.id)
            .collect();
        let mut fresh = Vec::new();
        for &b in &frontier {
            let cb = &store[b - 1];
            for ca in store.iter().take(b).filter(|c| !c.is_empty()) {
                fresh.extend(resolvents(cb, ca, &Policy::Plain).expect("plain never errs"));
            }
            fresh.extend(factors(cb, &Policy::Plain).expect("plain never errs"));
        }
        if fresh.is_empty() {
            break;
        }
        for mut c in fresh {
            c.id = store.len() + 1;
            let empty = c.is_empty();
            let id = c.id;
            store.push(c);
            level.push(k);
            if empty {
                found.push(extract(&store, problem.len(), id));
                if found.len() >= limit {
                    return found;
                }
            }
            if store.len() >= max_nodes {
                return found;
            }
        }
    }
    found
}

fn extract(store: &[Clause], inputs: usize, empty: ClauseId) -> Refutation {
    let ids = ancestors(store, empty);
    let mut renumber: BTreeMap<ClauseId, ClauseId> = (1..=inputs).map(|i| (i, i)).collect();
    let mut clauses: Vec<Clause> = store[..inputs].to_vec();
    for id in ids.into_iter().filter(|&id| id > inputs) {
        let mut c = store[id - 1].clone();
        c.id = clauses.len() + 1;
        renumber.insert(id, c.id);
        match &mut c.provenance {
            Provenance::Resolvent { left, right, .. } => {
                *left = renumber[left];
                *right = renumber[right];
            }
            Provenance::Factor { parent, .. } => *parent = renumber[parent],
            Provenance::Input => {}
        }
        clauses.push(c);
    }
    Refutation { clauses, inputs }
}
