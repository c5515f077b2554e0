//! The atom ordering and literal selection behind ordered resolution.

use polres::logic::{Literal, Signature};
use polres::ordering::{compare_atoms, is_maximal, is_strictly_maximal, Precedence, SelectionFn};
use polres::syntax::{parse_atom, VarTable};
use polres::workbench::{corpus, resolve_policy, run, Method, MethodOptions, RunOptions};

fn main() {
    let mut vars = VarTable::new();
    let atoms: Vec<_> = ["P(X)", "P(f(X))", "Q(a, X)", "P(Y)"]
        .iter()
        .map(|s| parse_atom(s, &mut vars).unwrap())
        .collect();
    let mut sig = Signature::new();
    atoms.iter().for_each(|a| sig.add_atom(a).unwrap());
    let prec = Precedence::parse_chain("a<f<P<Q", &sig).unwrap();
    for a in &atoms {
        for b in &atoms {
            println!("{a} vs {b}: {:?}", compare_atoms(&prec, a, b).unwrap());
        }
    }
    let lits: Vec<Literal> = atoms[..2].iter().cloned().map(Literal::pos).collect();
    println!(
        "P(X) maximal in P(X) | P(f(X)): {}",
        is_maximal(0, &lits, &prec).unwrap()
    );
    println!(
        "P(f(X)) strictly maximal: {}",
        is_strictly_maximal(1, &lits, &prec).unwrap()
    );

    let problem = corpus::load("example1").unwrap();
    for (chain, selection) in [
        ("Q<P", SelectionFn::None),
        ("P<Q", SelectionFn::None),
        ("Q<P", SelectionFn::AllNegative),
    ] {
        let opts = MethodOptions {
            precedence: Some(chain.into()),
            selection: selection.clone(),
            ..Default::default()
        };
        let policy = resolve_policy(&problem, Method::Ordered, &opts).unwrap();
        let report = run(&problem, &policy, &RunOptions::with_budget(50)).unwrap();
        println!("{chain} {selection:?}: {}", report.machine_line());
    }
}
