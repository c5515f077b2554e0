#![allow(dead_code)]

use polres::logic::{Atom, Clause, Literal, Substitution, Term, Var};
use polres::rewrite::Prop;
use polres::sequent::{ProofTree, Witness};
use proptest::prelude::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Terms over constants `a`, `z`, unary `g`, binary `h` and variables `X0..X2`.
pub fn term(depth: u32) -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![
        Just(Term::constant("a")),
        Just(Term::constant("z")),
        (0u32..3).prop_map(Term::var),
    ];
    leaf.prop_recursive(depth, 12, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|t| Term::app("g", vec![t])),
            (inner.clone(), inner).prop_map(|(s, t)| Term::app("h", vec![s, t])),
        ]
    })
}

pub fn ground_term(depth: u32) -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![Just(Term::constant("a")), Just(Term::constant("z"))];
    leaf.prop_recursive(depth, 12, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|t| Term::app("g", vec![t])),
            (inner.clone(), inner).prop_map(|(s, t)| Term::app("h", vec![s, t])),
        ]
    })
}

/// Atoms `P(s, t)`.
pub fn atom(depth: u32) -> impl Strategy<Value = Atom> {
    (term(depth), term(depth)).prop_map(|(s, t)| Atom::new("P", vec![s, t]))
}

pub fn ground_atom(depth: u32) -> impl Strategy<Value = Atom> {
    (ground_term(depth), ground_term(depth)).prop_map(|(s, t)| Atom::new("P", vec![s, t]))
}

pub fn substitution() -> impl Strategy<Value = Substitution> {
    proptest::collection::vec(proptest::option::of(term(2)), 3).prop_map(|ts| {
        Substitution::from_pairs(
            ts.into_iter()
                .enumerate()
                .filter_map(|(i, t)| t.map(|t| (Var(i as u32), t))),
        )
    })
}

pub fn clause(id: usize) -> impl Strategy<Value = Clause> {
    proptest::collection::vec((any::<bool>(), atom(2)), 1..4).prop_map(move |lits| {
        Clause::new(
            id,
            lits.into_iter()
                .map(|(p, a)| if p { Literal::pos(a) } else { Literal::neg(a) })
                .collect(),
        )
    })
}

/// Every ground term of depth at most 2 built from `a`, `z` and `g`.
pub fn depth2_universe() -> Vec<Term> {
    let a = Term::constant("a");
    let z = Term::constant("z");
    vec![
        a.clone(),
        z.clone(),
        Term::app("g", vec![a]),
        Term::app("g", vec![z]),
    ]
}

/// Every ground substitution from `vars` into `universe`.
pub fn all_groundings(vars: &[Var], universe: &[Term]) -> Vec<Substitution> {
    let mut out = vec![Substitution::new()];
    for &v in vars {
        out = out
            .into_iter()
            .flat_map(|s| {
                universe.iter().map(move |t| {
                    let mut s = s.clone();
                    s.bind(v, t.clone());
                    s
                })
            })
            .collect();
    }
    out
}

fn count_witnesses(p: &mut ProofTree) -> usize {
    p.witnesses_mut().len()
        + p.children_mut()
            .into_iter()
            .map(count_witnesses)
            .sum::<usize>()
}

fn nth_witness<'a>(p: &'a mut ProofTree, k: &mut usize) -> Option<&'a mut Witness> {
    let n = p.witnesses_mut().len();
    if *k < n {
        return p.witnesses_mut().into_iter().nth(*k);
    }
    *k -= n;
    for c in p.children_mut() {
        if let Some(w) = nth_witness(c, k) {
            return Some(w);
        }
    }
    None
}

/// Damages one witness so that its trace no longer leads to its target.
pub fn mutate(proof: &ProofTree, rng: &mut ChaCha8Rng) -> ProofTree {
    let mut out = proof.clone();
    let total = count_witnesses(&mut out);
    loop {
        let mut k = rng.gen_range(0..total);
        let w = nth_witness(&mut out, &mut k).unwrap();
        match rng.gen_range(0..3) {
            0 => {
                w.target = match w.target {
                    Prop::Falsum => Prop::Atom(Atom::prop("ZZ")),
                    _ => Prop::Falsum,
                };
                return out;
            }
            1 if !w.trace.is_empty() => {
                let i = rng.gen_range(0..w.trace.len());
                w.trace.steps[i].subst.bind(Var(99), Term::constant("a"));
                return out;
            }
            2 if !w.trace.is_empty() => {
                w.trace.steps.pop();
                return out;
            }
            _ => {}
        }
    }
}
