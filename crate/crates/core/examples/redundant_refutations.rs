//! Two different refutations of the same clause set: one resolves `P`
//! against `-P | Q` first, the other `-P | Q` against `-Q`.

use polres::saturation::enumerate_refutations;
use polres::workbench::corpus;

fn main() {
    let problem = corpus::load("intro").unwrap();
    let refutations = enumerate_refutations(&problem.clauses, 10);
    println!(
        "{} distinct refutations of {{P}}, {{-P, Q}}, {{-Q}}",
        refutations.len()
    );
    for (k, r) in refutations.iter().enumerate() {
        println!("refutation {}:", k + 1);
        for c in r.derived() {
            println!("  {}: {c}  from {:?}", c.id, c.provenance.parents());
        }
    }
}
