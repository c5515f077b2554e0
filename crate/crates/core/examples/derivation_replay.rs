//! A refutation is a DAG of inferences; replaying it re-runs every
//! unification and must reproduce each clause.

use polres::saturation::{replay_derivation, saturate, Policy, SaturationConfig};
use polres::workbench::corpus;

fn main() {
    let problem = corpus::load("example_aaa_refute").unwrap();
    let result = saturate(
        &problem.clauses,
        &Policy::Prm,
        SaturationConfig::with_budget(50),
    )
    .unwrap();
    let ids = result.derivation().expect("refuted");
    for &id in &ids {
        let c = result.clause(id).unwrap();
        println!("{id}: {c}  {:?}", c.provenance.parents());
    }
    println!("replay: {:?}", replay_derivation(&result.clauses, &ids));

    let mut forged = result.clauses.clone();
    let last = forged.len() - 2;
    forged[last].literals.reverse();
    forged[last].literals[0].positive ^= true;
    println!(
        "replay after tampering: {:?}",
        replay_derivation(&forged, &ids).map_err(|e| e.to_string())
    );
}
