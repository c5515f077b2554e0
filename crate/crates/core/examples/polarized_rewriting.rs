//! Rules fire only on atoms whose polarity matches their sign.

use polres::rewrite::{reachable, rewrites_to, Sign};
use polres::syntax::{parse_prop, VarTable};
use polres::workbench::corpus;

fn main() {
    let system = corpus::load("example_bbb").unwrap().rewrite_system();
    let mut vars = VarTable::new();
    let p = parse_prop("~eps(or(a, not(b)))", &mut vars).unwrap();
    for sign in [Sign::Plus, Sign::Minus] {
        println!("{p} with sign {sign}:");
        for (q, trace) in reachable(&system, &p, sign, 2, 20) {
            println!("  {q}   {trace}");
        }
    }
    let target = parse_prop("~(eps(a) \\/ eps(not(b)))", &mut vars).unwrap();
    println!(
        "{p} ->+* {target}: {:?}",
        rewrites_to(&system, &p, Sign::Plus, &target, 3).map(|t| t.to_string())
    );
    println!(
        "{p} ->-* {target}: {:?}",
        rewrites_to(&system, &p, Sign::Minus, &target, 3).map(|t| t.to_string())
    );
}
