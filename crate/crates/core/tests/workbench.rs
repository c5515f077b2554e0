use std::process::Command;

use polres::workbench::{
    compare, corpus, parse_problem, resolve_policy, run, Method, MethodOptions, RunOptions,
    MACHINE_LINE_PATTERN,
};
use regex::Regex;

#[test]
fn corpus_round_trips() {
    for name in corpus::NAMES {
        let p = corpus::load(name).unwrap();
        let again = parse_problem(name, &p.to_string()).unwrap();
        assert_eq!(again, p, "{name}");
    }
    let with_rules = parse_problem(
        "r",
        "rule- P(X) -> forall Y. (Q(X, Y) \\/ ~R(Y)).\nclause -P(a).\n",
    )
    .unwrap();
    assert_eq!(
        parse_problem("r", &with_rules.to_string()).unwrap(),
        with_rules
    );
}

#[test]
fn one_machine_line_per_report() {
    let re = Regex::new(MACHINE_LINE_PATTERN).unwrap();
    for name in corpus::NAMES {
        let p = corpus::load(name).unwrap();
        for m in Method::ALL {
            let policy = resolve_policy(&p, m, &MethodOptions::default()).unwrap();
            for timing in [false, true] {
                let opts = RunOptions {
                    timing,
                    ..RunOptions::with_budget(60)
                };
                let report = run(&p, &policy, &opts).unwrap();
                let text = report.to_string();
                let hits: Vec<_> = text.lines().filter(|l| re.is_match(l)).collect();
                assert_eq!(hits.len(), 1, "{name} {m}");
                assert_eq!(text.lines().last(), Some(hits[0]));
                let caps = re.captures(hits[0]).unwrap();
                assert_eq!(&caps[1], report.outcome.label());
                assert_eq!(caps[2].parse::<usize>().unwrap(), report.generated);
                assert_eq!(caps[3].parse::<usize>().unwrap(), report.kept);
            }
        }
    }
}

#[test]
fn compare_rows_match_single_runs() {
    let opts = MethodOptions {
        precedence: Some("Q<P".into()),
        ..Default::default()
    };
    for name in ["example1", "intro", "loop"] {
        let p = corpus::load(name).unwrap();
        let run_opts = RunOptions::with_budget(50);
        let opts = if name == "loop" {
            MethodOptions::default()
        } else {
            opts.clone()
        };
        let table = compare(&p, &Method::ALL, &opts, &run_opts).unwrap();
        assert_eq!(table.rows.len(), 4);
        for row in &table.rows {
            let report = run(
                &p,
                &resolve_policy(&p, row.method, &opts).unwrap(),
                &run_opts,
            )
            .unwrap();
            assert_eq!(row.outcome, report.outcome.label());
            assert_eq!((row.generated, row.kept), (report.generated, report.kept));
        }
    }
}

#[test]
fn problem_errors_carry_positions() {
    let cases = [
        ("theory P | Q.", "lacks selected"),
        ("clause P* | Q.", "outside a theory"),
        ("theory P* | Q*.", "more than one"),
        ("clause P(a).\nclause P(a, b).", "arity"),
        ("lemma P.", "expected `theory`"),
    ];
    for (text, needle) in cases {
        let e = parse_problem("bad", text).unwrap_err();
        assert!(e.to_string().contains(needle), "{text}: {e}");
    }
    assert_eq!(
        parse_problem("bad", "clause P(a).\nclause P(a, b).")
            .unwrap_err()
            .line,
        2
    );
}

fn polres(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_polres"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
    )
}

#[test]
fn exit_codes_follow_outcomes() {
    assert_eq!(polres(&["prove", "example1", "--method", "sos"]).0, 0);
    assert_eq!(polres(&["prove", "example1"]).0, 1);
    assert_eq!(
        polres(&["prove", "loop", "--method", "sos", "--budget", "20"]).0,
        2
    );
    assert_eq!(polres(&["prove", "no-such-problem"]).0, 3);
    assert_eq!(polres(&["prove", "example1", "--method", "magic"]).0, 3);
    assert_eq!(polres(&["frobnicate"]).0, 3);
    let (code, out) = polres(&["rules", "example1"]);
    assert_eq!(code, 0);
    assert!(out.contains("criterion: FAILS"));
    let (code, out) = polres(&["cutfree", "example1", "--goal", "|- Q"]);
    assert_eq!(code, 1, "{out}");
    let (code, out) = polres(&["cutfree", "example1", "--goal", "P |- Q"]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn check_proof_verb() {
    let dir = std::env::temp_dir().join(format!("polres-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("good.proof");
    std::fs::write(&good, corpus::CUT_PROOF).unwrap();
    let bad = dir.join("bad.proof");
    std::fs::write(&bad, corpus::CUT_PROOF.replacen("rule=2", "rule=1", 1)).unwrap();
    let (code, out) = polres(&["check-proof", "example1", good.to_str().unwrap()]);
    assert_eq!((code, out.trim()), (0, "ok: |- Q"));
    let (code, out) = polres(&["check-proof", "example1", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.starts_with("rejected"), "{out}");
    std::fs::remove_dir_all(dir).unwrap();
}
