//! `P(f(X))* | -P(X)` with `P(a)`: polarized resolution has nothing to do,
//! set of support derives P(f(a)), P(f(f(a))), ... until the budget runs out.

use polres::workbench::{corpus, resolve_policy, run, Method, MethodOptions, RunOptions};

fn main() {
    let problem = corpus::load("loop").unwrap();
    for method in [Method::Prm, Method::Sos] {
        let policy = resolve_policy(&problem, method, &MethodOptions::default()).unwrap();
        let report = run(&problem, &policy, &RunOptions::with_budget(20)).unwrap();
        println!("{method}: {}", report.machine_line());
        for c in report.result.derived().iter().take(5) {
            println!("  {c}");
        }
    }
}
