mod common;

use common::mutate;
use polres::logic::Term;
use polres::rewrite::RewriteSystem;
use polres::sequent::{
    check_proof, cutfree_search, has_cut, parse_proof_file, print_proof_file, ProofFile, ProofTree,
    SearchConfig, Sequent,
};
use polres::syntax::{parse_sequent_sides, VarTable};
use polres::workbench::{corpus, term_universe};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn sequent(text: &str) -> Sequent {
    let (gamma, delta) = parse_sequent_sides(text, &mut VarTable::new()).unwrap();
    Sequent::new(gamma, delta)
}

fn system(name: &str) -> RewriteSystem {
    corpus::load(name)
        .map(|p| p.rewrite_system())
        .unwrap_or_default()
}

/// Goals with a cut-free proof, with the system they are proved modulo.
fn provable() -> Vec<(&'static str, &'static str)> {
    vec![
        ("none", r"|- (Q \/ ~Q)"),
        ("none", "P |- P"),
        ("none", r"P |- (Q \/ P)"),
        ("none", "~~P |- P"),
        ("none", r"(P \/ Q) |- Q, P"),
        ("none", "forall X. R(X) |- R(a)"),
        ("none", r"|- forall X. (R(X) \/ ~R(X))"),
        ("example1", "P |- Q"),
        ("example_bbb", "eps(or(a, 0)) |- eps(a), eps(0)"),
        ("example_bbb", "|- eps(not(a)), eps(a)"),
        ("example_bbb", "eps(all_t(b)) |- eps(app(b, a))"),
    ]
}

fn search_config(name: &str) -> SearchConfig {
    let terms = match name {
        "example_bbb" => term_universe("a", &corpus::load(name).unwrap().signature).unwrap(),
        _ => vec![Term::constant("a")],
    };
    SearchConfig::new(6, 3).with_terms(terms)
}

#[test]
fn search_output_passes_the_checker() {
    for (name, goal) in provable() {
        let sys = system(name);
        let goal = sequent(goal);
        let proof = cutfree_search(&sys, &goal, &search_config(name))
            .unwrap_or_else(|| panic!("no proof of {goal}"));
        assert!(!has_cut(&proof), "{goal}");
        assert_eq!(check_proof(&sys, &goal, &proof), Ok(()), "{goal}");
        let file = ProofFile {
            goal: goal.clone(),
            proof,
        };
        let again = parse_proof_file(&print_proof_file(&file)).unwrap();
        assert_eq!(
            check_proof(&sys, &again.goal, &again.proof),
            Ok(()),
            "{goal} after printing"
        );
    }
}

#[test]
fn unprovable_goals_have_no_proof() {
    for (name, goal) in [
        ("none", "|- P"),
        ("none", "P |- Q"),
        ("example1", "|- Q"),
        ("none", "|- ~P"),
    ] {
        assert!(
            cutfree_search(&system(name), &sequent(goal), &SearchConfig::new(8, 3)).is_none(),
            "{goal}"
        );
    }
}

#[test]
fn weakening_on_top_of_a_proof() {
    let sys = system("none");
    let goal = sequent("P |- P");
    let inner = cutfree_search(&sys, &goal, &SearchConfig::new(4, 0)).unwrap();
    let weakened = ProofTree::WeakLeft {
        index: 1,
        premise: Box::new(inner.clone()),
    };
    let bigger = sequent("P, Q |- P");
    assert_eq!(check_proof(&sys, &bigger, &weakened), Ok(()));
    assert!(check_proof(&sys, &goal, &weakened).is_err());
    let right = ProofTree::WeakRight {
        index: 1,
        premise: Box::new(inner),
    };
    assert_eq!(check_proof(&sys, &sequent("P |- P, R(a)"), &right), Ok(()));
}

#[test]
fn eigenvariable_clash_is_rejected() {
    let text = r#"(proof (sequent "R(X0) |- forall X1. R(X1)")
      (forall-right 0 (witness "forall X1. R(X1)" (trace)) (eigen X0 "R(X0)")
        (axiom (witness "R(X0)" (trace)) (witness "R(X0)" (trace)))))"#;
    let file = parse_proof_file(text).unwrap();
    let err = check_proof(&RewriteSystem::new(), &file.goal, &file.proof).unwrap_err();
    assert!(err.reason.contains("eigenvariable"), "{err}");
}

#[test]
fn mutated_traces_are_rejected() {
    let cut = parse_proof_file(corpus::CUT_PROOF).unwrap();
    let bbb = system("example_bbb");
    let goal = sequent("eps(or(a, 0)) |- eps(a), eps(0)");
    let found = cutfree_search(&bbb, &goal, &search_config("example_bbb")).unwrap();
    let cases = [
        (system("example1"), cut.goal, cut.proof),
        (bbb, goal, found),
    ];
    for (sys, goal, proof) in &cases {
        assert_eq!(check_proof(sys, goal, proof), Ok(()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut rejected = 0;
    for trial in 0..50 {
        let (sys, goal, proof) = &cases[trial % 2];
        let mutant = mutate(proof, &mut rng);
        assert_ne!(&mutant, proof);
        if check_proof(sys, goal, &mutant).is_err() {
            rejected += 1;
        }
    }
    assert_eq!(rejected, 50);
}

#[test]
fn corpus_proof_has_a_cut() {
    let file = parse_proof_file(corpus::CUT_PROOF).unwrap();
    assert!(has_cut(&file.proof));
    assert_eq!(
        check_proof(&system("example1"), &file.goal, &file.proof),
        Ok(())
    );
    let proof = cutfree_search(
        &RewriteSystem::new(),
        &sequent(r"|- (Q \/ ~Q)"),
        &SearchConfig::new(4, 0),
    )
    .unwrap();
    assert!(!has_cut(&proof));
}
