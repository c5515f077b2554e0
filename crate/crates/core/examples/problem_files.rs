//! The problem file format: parse, print, and the errors it reports.

use polres::workbench::{corpus, parse_problem};

fn main() {
    let text = "# a small theory\ntheory Even(s(X))* | Odd(X).\nclause Even(0).\nrule- Odd(X) -> ~Even(X).\n";
    let p = parse_problem("small", text).unwrap();
    print!("{p}");
    assert_eq!(parse_problem("small", &p.to_string()).unwrap(), p);

    for name in corpus::NAMES {
        let p = corpus::load(name).unwrap();
        println!(
            "{name}: {} clauses, {} rules",
            p.clauses.len(),
            p.rewrite_system().len()
        );
    }

    for bad in [
        "theory P | Q.",
        "clause P* | Q.",
        "theory P* | Q*.",
        "clause P(a) | P.",
        "clause P(a",
    ] {
        println!("{bad:<20} {}", parse_problem("bad", bad).unwrap_err());
    }
}
