//! Each restriction alone refutes the problem, polarized resolution modulo
//! (both combined) does not. Adding `-P` to the second theory makes it refutable.

use polres::workbench::{compare, corpus, resolve_policy, run, Method, MethodOptions, RunOptions};

fn main() {
    let example1 = corpus::load("example1").unwrap();
    print!("{example1}");
    let opts = MethodOptions {
        precedence: Some("Q<P".into()),
        ..Default::default()
    };
    let table = compare(&example1, &Method::ALL, &opts, &RunOptions::with_budget(50)).unwrap();
    println!("{table}");

    let aaa = corpus::load("example_aaa_refute").unwrap();
    let policy = resolve_policy(&aaa, Method::Prm, &MethodOptions::default()).unwrap();
    let report = run(&aaa, &policy, &RunOptions::with_budget(50)).unwrap();
    print!("{report}");
}
