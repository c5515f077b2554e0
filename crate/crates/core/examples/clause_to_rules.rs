//! One-way clauses as polarized rewrite rules, and the verdict of the
//! disjoint left-hand sides criterion.

use polres::workbench::{corpus, emit_rules};

fn main() {
    for name in ["example1", "example_aaa", "example_bbb"] {
        println!("# {name}");
        print!("{}", emit_rules(&corpus::load(name).unwrap()));
        println!();
    }
}
