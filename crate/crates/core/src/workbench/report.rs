use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::logic::{Clause, ClauseId, Provenance};
use crate::ordering::{OrderError, Precedence, SelectionFn};
use crate::rewrite::{check_disjoint_criterion, overlapping_heads};
use crate::saturation::{
    saturate, DiscardReason, Event, Outcome, Policy, SaturationConfig, SaturationError,
    SaturationResult,
};

use super::problem::Problem;

/// Pattern matched by the last line of every run report.
pub const MACHINE_LINE_PATTERN: &str =
    r"^OUTCOME: (REFUTED|SATURATED|BUDGET) generated=(\d+) kept=(\d+)$";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Plain,
    Sos,
    Ordered,
    Prm,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::Plain, Method::Sos, Method::Ordered, Method::Prm];

    pub fn name(self) -> &'static str {
        match self {
            Method::Plain => "plain",
            Method::Sos => "sos",
            Method::Ordered => "ordered",
            Method::Prm => "prm",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown method `{0}` (expected plain, sos, ordered or prm)")]
pub struct UnknownMethod(pub String);

impl FromStr for Method {
    type Err = UnknownMethod;

    fn from_str(s: &str) -> Result<Method, UnknownMethod> {
        match s {
            "plain" => Ok(Method::Plain),
            "sos" => Ok(Method::Sos),
            "ordered" | "ors" => Ok(Method::Ordered),
            "prm" => Ok(Method::Prm),
            other => Err(UnknownMethod(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WorkbenchError {
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error(transparent)]
    Saturation(#[from] SaturationError),
}

/// Method parameters. Absent values fall back to defaults derived from the
/// problem: the theory lines for set of support, first-appearance order of
/// the symbols for the precedence.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MethodOptions {
    pub theory: Option<BTreeSet<ClauseId>>,
    /// A chain such as `Q<P`.
    pub precedence: Option<String>,
    pub selection: SelectionFn,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunOptions {
    pub budget: usize,
    pub subsumption: bool,
    /// Include wall-clock time in the report.
    pub timing: bool,
}

impl RunOptions {
    pub fn with_budget(budget: usize) -> RunOptions {
        RunOptions {
            budget,
            subsumption: false,
            timing: false,
        }
    }
}

pub fn resolve_policy(
    problem: &Problem,
    method: Method,
    opts: &MethodOptions,
) -> Result<Policy, WorkbenchError> {
    let policy = match method {
        Method::Plain => Policy::Plain,
        Method::Prm => Policy::Prm,
        Method::Sos => match &opts.theory {
            Some(theory) => Policy::SetOfSupport {
                theory: theory.clone(),
            },
            None => Policy::sos_from_roles(&problem.clauses),
        },
        Method::Ordered => {
            let precedence = match &opts.precedence {
                Some(chain) => Precedence::parse_chain(chain, &problem.signature)?,
                None => Precedence::from_signature(&problem.signature),
            };
            Policy::OrderedSelection {
                precedence,
                selection: opts.selection.clone(),
            }
        }
    };
    policy.validate(&problem.clauses)?;
    Ok(policy)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunReport {
    pub problem: String,
    pub method: String,
    pub outcome: Outcome,
    pub generated: usize,
    pub kept: usize,
    pub trace: Vec<String>,
    pub elapsed: Option<Duration>,
    pub result: SaturationResult,
}

impl RunReport {
    pub fn machine_line(&self) -> String {
        format!(
            "OUTCOME: {} generated={} kept={}",
            self.outcome.label(),
            self.generated,
            self.kept
        )
    }
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "problem: {}", self.problem)?;
        writeln!(f, "method: {}", self.method)?;
        for line in &self.trace {
            writeln!(f, "{line}")?;
        }
        if let Some(t) = self.elapsed {
            writeln!(f, "time: {:.3}ms", t.as_secs_f64() * 1e3)?;
        }
        writeln!(f, "{}", self.machine_line())
    }
}

fn role_tag(c: &Clause, policy: &Policy) -> &'static str {
    match policy {
        Policy::SetOfSupport { theory } if theory.contains(&c.id) => "  [theory]",
        _ if c.is_one_way() => "  [one-way]",
        _ => "",
    }
}

fn origin(c: &Clause, store: &[Clause]) -> String {
    match &c.provenance {
        Provenance::Input => "input".to_string(),
        Provenance::Resolvent {
            left,
            right,
            left_pos,
            right_pos,
            unifier,
            ..
        } => {
            let l = &store[left - 1].literals[*left_pos];
            let r = &store[right - 1].literals[*right_pos];
            format!("res {left}.{left_pos} [{l}] x {right}.{right_pos} [{r}] mgu {unifier}")
        }
        Provenance::Factor {
            parent,
            keep,
            drop,
            unifier,
        } => {
            format!("fac {parent}.{keep}={parent}.{drop} mgu {unifier}")
        }
    }
}

fn trace_lines(result: &SaturationResult) -> Vec<String> {
    let store = &result.clauses;
    let mut out = Vec::new();
    for c in &store[..result.inputs] {
        out.push(format!(
            "input {}: {c}{}",
            c.id,
            role_tag(c, &result.policy)
        ));
    }
    for e in &result.events {
        match e {
            Event::Given(id) => out.push(format!("given {id}: {}", store[id - 1])),
            Event::Kept { step, id } => {
                let c = &store[id - 1];
                out.push(format!(
                    "  step {step}: kept {id}: {c}  <- {}",
                    origin(c, store)
                ));
            }
            Event::Discarded {
                step,
                clause,
                reason,
            } => {
                let why = match reason {
                    DiscardReason::VariantOf(d) => format!("variant of {d}"),
                    DiscardReason::SubsumedBy(d) => format!("subsumed by {d}"),
                };
                out.push(format!(
                    "  step {step}: dropped {clause} ({why})  <- {}",
                    origin(clause, store)
                ));
            }
        }
    }
    if let Some(ids) = result.derivation() {
        out.push("derivation:".to_string());
        for id in ids {
            let c = &store[id - 1];
            out.push(format!("  {id}: {c}  <- {}", origin(c, store)));
        }
    }
    out
}

/// Saturates the problem under `policy` and reports every inference.
pub fn run(
    problem: &Problem,
    policy: &Policy,
    opts: &RunOptions,
) -> Result<RunReport, WorkbenchError> {
    let config = SaturationConfig {
        budget: opts.budget,
        subsumption: opts.subsumption,
    };
    let start = Instant::now();
    let result = saturate(&problem.clauses, policy, config)?;
    let elapsed = opts.timing.then(|| start.elapsed());
    Ok(RunReport {
        problem: problem.name.clone(),
        method: policy.to_string(),
        outcome: result.outcome.clone(),
        generated: result.generated,
        kept: result.kept,
        trace: trace_lines(&result),
        elapsed,
        result,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompareRow {
    pub method: Method,
    pub outcome: &'static str,
    pub generated: usize,
    pub kept: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CompareTable {
    pub rows: Vec<CompareRow>,
}

impl fmt::Display for CompareTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return Ok(());
        }
        let cells: Vec<[String; 4]> = self
            .rows
            .iter()
            .map(|r| {
                [
                    r.method.to_string(),
                    r.outcome.to_string(),
                    r.generated.to_string(),
                    r.kept.to_string(),
                ]
            })
            .collect();
        let header = ["method", "outcome", "generated", "kept"];
        let mut width = header.map(str::len);
        for row in &cells {
            for (w, c) in width.iter_mut().zip(row) {
                *w = (*w).max(c.len());
            }
        }
        let line = |f: &mut fmt::Formatter<'_>, row: [&str; 4]| {
            writeln!(
                f,
                "{:<a$}  {:<b$}  {:>c$}  {:>d$}",
                row[0],
                row[1],
                row[2],
                row[3],
                a = width[0],
                b = width[1],
                c = width[2],
                d = width[3]
            )
        };
        line(f, header)?;
        for row in &cells {
            line(f, [&row[0], &row[1], &row[2], &row[3]])?;
        }
        for r in &self.rows {
            writeln!(
                f,
                "COMPARE method={} outcome={} generated={} kept={}",
                r.method, r.outcome, r.generated, r.kept
            )?;
        }
        Ok(())
    }
}

/// One [`run`] per method, in the given order. Configuration errors of any
/// method abort before the first run.
pub fn compare(
    problem: &Problem,
    methods: &[Method],
    method_opts: &MethodOptions,
    run_opts: &RunOptions,
) -> Result<CompareTable, WorkbenchError> {
    let policies = methods
        .iter()
        .map(|&m| resolve_policy(problem, m, method_opts))
        .collect::<Result<Vec<_>, _>>()?;
    let mut rows = Vec::new();
    for (&method, policy) in methods.iter().zip(&policies) {
        let report = run(problem, policy, run_opts)?;
        rows.push(CompareRow {
            method,
            outcome: report.outcome.label(),
            generated: report.generated,
            kept: report.kept,
        });
    }
    Ok(CompareTable { rows })
}

/// The rewrite system of the problem, one rule per line, followed by the
/// verdict of the disjointness criterion.
pub fn emit_rules(problem: &Problem) -> String {
    let sys = problem.rewrite_system();
    let mut out = String::new();
    for r in sys.rules() {
        out.push_str(&r.to_string());
        out.push('\n');
    }
    if check_disjoint_criterion(sys.rules()) {
        out.push_str("criterion: PASSES\n");
    } else {
        out.push_str("criterion: FAILS\n");
        for (n, p) in overlapping_heads(sys.rules()) {
            out.push_str(&format!(
                "overlap: rule {n} (negative) with rule {p} (positive)\n"
            ));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::workbench::corpus;

    fn report(name: &str, method: Method, budget: usize) -> RunReport {
        let p = corpus::load(name).unwrap();
        let policy = resolve_policy(&p, method, &MethodOptions::default()).unwrap();
        run(&p, &policy, &RunOptions::with_budget(budget)).unwrap()
    }

    #[test]
    fn example1_lines() {
        assert!(report("example1", Method::Prm, 50)
            .machine_line()
            .starts_with("OUTCOME: SATURATED"));
        assert!(report("example1", Method::Sos, 50)
            .machine_line()
            .starts_with("OUTCOME: REFUTED"));
    }

    #[test]
    fn loop_trace_mentions_iterates() {
        let text = report("loop", Method::Sos, 20).to_string();
        assert!(text.contains("P(f(a))"));
        assert!(text.contains("P(f(f(a)))"));
        assert!(text.contains("OUTCOME: BUDGET generated=20 "), "{text}");
    }

    #[test]
    fn bad_precedence_is_reported_first() {
        let p = corpus::load("example1").unwrap();
        let opts = MethodOptions {
            precedence: Some("Q".into()),
            ..Default::default()
        };
        assert!(resolve_policy(&p, Method::Ordered, &opts).is_err());
    }

    #[test]
    fn empty_compare() {
        let p = corpus::load("example1").unwrap();
        let t = compare(
            &p,
            &[],
            &MethodOptions::default(),
            &RunOptions::with_budget(5),
        )
        .unwrap();
        assert!(t.rows.is_empty());
        assert_eq!(t.to_string(), "");
    }

    #[test]
    fn rules_of_example1() {
        let text = emit_rules(&corpus::load("example1").unwrap());
        assert!(
            text.starts_with("rule+ P -> ~Q.\nrule- P -> Q.\ncriterion: FAILS\n"),
            "{text}"
        );
    }
}
