//! Most general unifiers, matching and the occurs check.

use polres::logic::{match_atom, unify};
use polres::syntax::{parse_atom, VarTable};

fn main() {
    let pairs = [
        ("P(X, f(Y))", "P(g(Z), f(a))"),
        ("P(X, X)", "P(f(Y), f(a))"),
        ("P(X)", "P(f(X))"),
        ("P(a)", "Q(a)"),
    ];
    for (l, r) in pairs {
        let mut vars = VarTable::new();
        let (a, b) = (
            parse_atom(l, &mut vars).unwrap(),
            parse_atom(r, &mut vars).unwrap(),
        );
        match unify(&a, &b) {
            Ok(s) => println!("{a} = {b}: {s} gives {}", s.apply(&a)),
            Err(e) => println!("{a} = {b}: {e}"),
        }
        println!(
            "  {a} matches onto {b}: {:?}",
            match_atom(&a, &b).map(|s| s.to_string())
        );
    }
}
