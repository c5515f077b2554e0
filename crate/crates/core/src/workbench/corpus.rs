//! Built-in problems, loadable by name.

use super::problem::{parse_problem, Problem};

pub const INTRO: &str = "\
# refutable two ways: through Q or through -P
clause P.
clause -P | Q.
clause -Q.
";

pub const EXAMPLE1: &str = "\
# each restriction alone is complete, together they are not
theory P* | Q.
theory -P* | Q.
clause -Q.
";

pub const EXAMPLE_AAA: &str = "\
theory P* | Q.
theory P* | -Q.
";

pub const EXAMPLE_AAA_REFUTE: &str = "\
theory P* | Q.
theory P* | -Q.
clause -P.
";

/// Symbols: `eps` for the truth predicate, `or`, `not`, `all_t` for the
/// object-level connectives, `app` for application, `h_t` for the Skolem
/// symbol, `null`, `s` and `0` for arithmetic.
pub const EXAMPLE_BBB: &str = "\
theory -eps(or(X, Y))* | eps(X) | eps(Y).
theory eps(or(X, Y))* | -eps(X).
theory eps(or(X, Y))* | -eps(Y).
theory -eps(not(X))* | -eps(X).
theory eps(not(X))* | eps(X).
theory -eps(all_t(X))* | eps(app(X, Y)).
theory eps(all_t(X))* | -eps(app(X, h_t(X))).
theory -eps(null(s(X)))*.
theory eps(null(0))*.
";

pub const LOOP: &str = "\
# polarized resolution stops at once, set of support never does
theory P(f(X))* | -P(X).
clause P(a).
";

/// A cut proof of `|- Q` modulo the rules of `example1`
/// (rule 1 is `P ->+ ~Q`, rule 2 is `P ->- Q`).
pub const CUT_PROOF: &str = r#"(proof (sequent "|- Q")
  (cut "P"
    (witness "Q" (trace (step pos=. rule=2 sub={})))
    (witness "~Q" (trace (step pos=. rule=1 sub={})))
    (axiom (witness "Q" (trace)) (witness "Q" (trace)))
    (neg-right 1 (witness "~Q" (trace))
      (axiom (witness "Q" (trace)) (witness "Q" (trace))))))
"#;

pub const NAMES: [&str; 6] = [
    "intro",
    "example1",
    "example_aaa",
    "example_aaa_refute",
    "example_bbb",
    "loop",
];

pub fn source(name: &str) -> Option<&'static str> {
    Some(match name {
        "intro" => INTRO,
        "example1" => EXAMPLE1,
        "example_aaa" => EXAMPLE_AAA,
        "example_aaa_refute" => EXAMPLE_AAA_REFUTE,
        "example_bbb" => EXAMPLE_BBB,
        "loop" => LOOP,
        _ => return None,
    })
}

/// A built-in problem, parsed.
pub fn load(name: &str) -> Option<Problem> {
    source(name).map(|text| parse_problem(name, text).expect("corpus problems parse"))
}
