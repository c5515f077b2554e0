mod common;

use std::collections::BTreeSet;

use polres::logic::{literals_variant, Clause, Literal, Provenance};
use polres::ordering::SelectionFn;
use polres::saturation::{
    enumerate_refutations, replay_derivation, resolvents, saturate, verify_saturated, Outcome,
    Policy, SaturationConfig,
};
use polres::workbench::{corpus, resolve_policy, run, Method, MethodOptions, Problem, RunOptions};
use proptest::prelude::*;

fn corpus() -> Vec<Problem> {
    corpus::NAMES
        .iter()
        .map(|n| corpus::load(n).unwrap())
        .collect()
}

fn policies(p: &Problem) -> Vec<(Method, Policy)> {
    let mut out = Vec::new();
    for m in Method::ALL {
        out.push((m, resolve_policy(p, m, &MethodOptions::default()).unwrap()));
    }
    let neg = MethodOptions {
        selection: SelectionFn::AllNegative,
        ..Default::default()
    };
    out.push((
        Method::Ordered,
        resolve_policy(p, Method::Ordered, &neg).unwrap(),
    ));
    out
}

fn covered(plain: &[Clause], c: &Clause) -> bool {
    plain
        .iter()
        .any(|d| literals_variant(&d.literals, &c.literals))
}

#[test]
fn restricted_resolvents_are_plain_resolvents() {
    for p in corpus() {
        for (_, policy) in policies(&p) {
            for l in &p.clauses {
                for r in &p.clauses {
                    let plain = resolvents(l, r, &Policy::Plain).unwrap();
                    for c in resolvents(l, r, &policy).unwrap() {
                        assert!(
                            covered(&plain, &c),
                            "{}: {policy}: {c} from {} and {}",
                            p.name,
                            l.id,
                            r.id
                        );
                    }
                }
            }
        }
    }
}

fn one_way_pair() -> impl Strategy<Value = (Clause, Clause)> {
    (
        common::clause(1),
        common::clause(2),
        any::<prop::sample::Index>(),
        any::<bool>(),
    )
        .prop_map(|(l, r, sel, both)| {
            let s = sel.index(l.len());
            let l = Clause::one_way(1, l.literals, s);
            let r = if both {
                Clause::one_way(2, r.literals.clone(), 0)
            } else {
                r
            };
            (l, r)
        })
}

proptest! {
    #[test]
    fn restriction_subset_on_random_pairs((l, r) in one_way_pair()) {
        let plain = resolvents(&l, &r, &Policy::Plain).unwrap();
        let ordered = Policy::OrderedSelection {
            precedence: polres::ordering::Precedence::new(["P"], ["a", "z", "g", "h"]).unwrap(),
            selection: SelectionFn::AllNegative,
        };
        let sos = Policy::SetOfSupport { theory: BTreeSet::from([1]) };
        for policy in [Policy::Prm, ordered, sos] {
            for c in resolvents(&l, &r, &policy).unwrap() {
                prop_assert!(covered(&plain, &c), "{}: {}", policy, c);
            }
        }
    }

    #[test]
    fn prm_resolves_one_way_clauses_on_their_selection((l, r) in one_way_pair()) {
        let out = resolvents(&l, &r, &Policy::Prm).unwrap();
        if l.is_one_way() && r.is_one_way() {
            prop_assert!(out.is_empty());
        }
        for c in out {
            let Provenance::Resolvent { left_pos, right_pos, .. } = c.provenance else { unreachable!() };
            if let Some(s) = l.selected() {
                prop_assert_eq!(left_pos, s);
            }
            if let Some(s) = r.selected() {
                prop_assert_eq!(right_pos, s);
            }
        }
    }
}

#[test]
fn sos_never_joins_two_theory_clauses() {
    for p in corpus() {
        let policy = resolve_policy(&p, Method::Sos, &MethodOptions::default()).unwrap();
        let Policy::SetOfSupport { theory } = &policy else {
            unreachable!()
        };
        let result = saturate(&p.clauses, &policy, SaturationConfig::with_budget(200)).unwrap();
        for c in result.derived() {
            if let Provenance::Resolvent { left, right, .. } = c.provenance {
                assert!(
                    !(theory.contains(&left) && theory.contains(&right)),
                    "{}: {c}",
                    p.name
                );
            }
        }
    }
}

#[test]
fn prm_runs_respect_roles() {
    for p in corpus() {
        let result =
            saturate(&p.clauses, &Policy::Prm, SaturationConfig::with_budget(200)).unwrap();
        for c in result.derived() {
            assert!(!c.is_one_way());
            if let Provenance::Resolvent {
                left,
                right,
                left_pos,
                right_pos,
                ..
            } = c.provenance
            {
                let (l, r) = (result.clause(left).unwrap(), result.clause(right).unwrap());
                assert!(!(l.is_one_way() && r.is_one_way()));
                assert!(l.selected().is_none_or(|s| s == left_pos));
                assert!(r.selected().is_none_or(|s| s == right_pos));
            }
        }
    }
}

#[test]
fn refutations_replay() {
    let mut refuted = 0;
    for p in corpus() {
        for (_, policy) in policies(&p) {
            let result = saturate(&p.clauses, &policy, SaturationConfig::with_budget(300)).unwrap();
            if let Outcome::Refuted { empty } = result.outcome {
                refuted += 1;
                assert!(result.clause(empty).unwrap().is_empty());
                let ids = result.derivation().unwrap();
                assert_eq!(*ids.last().unwrap(), empty);
                replay_derivation(&result.clauses, &ids).unwrap();
            }
        }
    }
    assert!(refuted >= 8);
    for r in enumerate_refutations(&corpus::load("intro").unwrap().clauses, 10) {
        replay_derivation(&r.clauses, &r.ids()).unwrap();
    }
}

#[test]
fn forged_derivation_is_rejected() {
    let p = corpus::load("example_aaa_refute").unwrap();
    let result = saturate(&p.clauses, &Policy::Prm, SaturationConfig::with_budget(50)).unwrap();
    let ids = result.derivation().unwrap();
    let mut forged = result.clauses.clone();
    let victim = forged
        .iter()
        .position(|c| !c.is_empty() && !matches!(c.provenance, Provenance::Input))
        .unwrap();
    let lit = &mut forged[victim].literals[0];
    *lit = Literal {
        positive: !lit.positive,
        atom: lit.atom.clone(),
    };
    assert!(replay_derivation(&forged, &ids).is_err());
}

#[test]
fn saturated_sets_are_closed() {
    let mut saturated = 0;
    for p in corpus() {
        for (_, policy) in policies(&p) {
            let result = saturate(&p.clauses, &policy, SaturationConfig::with_budget(300)).unwrap();
            if result.outcome == Outcome::Saturated {
                saturated += 1;
                verify_saturated(&result).unwrap();
            }
            assert!(result.generated <= 300);
        }
    }
    assert!(saturated >= 4);
}

#[test]
fn reports_are_deterministic() {
    for p in corpus() {
        for (_, policy) in policies(&p) {
            let opts = RunOptions::with_budget(100);
            let a = run(&p, &policy, &opts).unwrap().to_string();
            let b = run(&p, &policy, &opts).unwrap().to_string();
            assert_eq!(a, b);
        }
    }
}

#[test]
fn budget_bounds_generation() {
    let p = corpus::load("loop").unwrap();
    let policy = Policy::sos_from_roles(&p.clauses);
    for budget in [1, 5, 20] {
        let result = saturate(&p.clauses, &policy, SaturationConfig::with_budget(budget)).unwrap();
        assert_eq!(result.outcome, Outcome::BudgetExhausted);
        assert_eq!(result.generated, budget);
    }
}
