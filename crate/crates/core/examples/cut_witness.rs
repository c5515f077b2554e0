//! Modulo `P ->- Q` and `P ->+ ~Q` the sequent `|- Q` has a proof that cuts
//! through `P` but no cut-free proof.

use polres::rewrite::RewriteSystem;
use polres::sequent::{
    check_proof, cutfree_search, has_cut, parse_proof_file, print_proof_file, ProofFile,
    SearchConfig, Sequent,
};
use polres::syntax::{parse_sequent_sides, VarTable};
use polres::workbench::corpus;

fn main() {
    let system = corpus::load("example1").unwrap().rewrite_system();
    let file = parse_proof_file(corpus::CUT_PROOF).unwrap();
    println!(
        "cut proof of {}: {:?}, has_cut={}",
        file.goal,
        check_proof(&system, &file.goal, &file.proof),
        has_cut(&file.proof)
    );

    let config = SearchConfig::new(8, 3);
    match cutfree_search(&system, &file.goal, &config) {
        Some(p) => println!(
            "unexpected cut-free proof:\n{}",
            print_proof_file(&ProofFile {
                goal: file.goal.clone(),
                proof: p
            })
        ),
        None => println!("no cut-free proof of {} within depth 8, fuel 3", file.goal),
    }

    let (gamma, delta) = parse_sequent_sides(r"|- (Q \/ ~Q)", &mut VarTable::new()).unwrap();
    let goal = Sequent::new(gamma, delta);
    let proof = cutfree_search(&RewriteSystem::new(), &goal, &SearchConfig::new(4, 0)).unwrap();
    print!("{}", print_proof_file(&ProofFile { goal, proof }));
}
