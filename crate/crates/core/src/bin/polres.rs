use std::collections::BTreeSet;
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use polres::ordering::SelectionFn;
use polres::saturation::Outcome;
use polres::sequent::{
    check_proof, cutfree_search, parse_proof_file, print_proof_file, ProofFile, SearchConfig,
    Sequent,
};
use polres::syntax::{parse_sequent_sides, VarTable};
use polres::workbench::{
    compare, corpus, emit_rules, parse_problem, resolve_policy, run, term_universe, Method,
    MethodOptions, Problem, RunOptions,
};

/// Resolution workbench: exit status 0 refuted, 1 saturated, 2 budget
/// exhausted, 3 usage or input error.
#[derive(Parser)]
#[command(name = "polres", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Saturate a problem under one method and print the trace.
    Prove {
        /// Problem file or built-in name.
        problem: String,
        #[arg(long, default_value = "prm")]
        method: Method,
        #[command(flatten)]
        opts: MethodArgs,
    },
    /// Run several methods on one problem and tabulate the outcomes.
    Compare {
        problem: String,
        /// Comma-separated methods.
        #[arg(long, value_delimiter = ',', default_value = "plain,sos,ordered,prm")]
        method: Vec<Method>,
        #[command(flatten)]
        opts: MethodArgs,
    },
    /// Print the polarized rewrite rules of the theory clauses.
    Rules { problem: String },
    /// Check a proof file against the rewrite system of a problem.
    CheckProof { problem: String, proof: String },
    /// Search for a cut-free proof modulo the rewrite system of a problem.
    Cutfree {
        problem: String,
        /// Sequent such as `|- Q` or `P(a) |- Q(a)`.
        #[arg(long)]
        goal: String,
        #[arg(long, default_value_t = 8)]
        depth: usize,
        #[arg(long, default_value_t = 3)]
        fuel: usize,
        /// Instantiation terms; function names are applied to the others.
        #[arg(long, default_value = "")]
        terms: String,
    },
}

#[derive(Args)]
struct MethodArgs {
    #[arg(long, default_value_t = 1000)]
    budget: usize,
    /// Precedence chain, lowest first, e.g. `Q<P`.
    #[arg(long)]
    precedence: Option<String>,
    /// `none`, `all-neg` or `table=FILE`.
    #[arg(long, default_value = "none")]
    selection: String,
    /// Theory clause ids for set of support; defaults to the theory lines.
    #[arg(long, value_delimiter = ',')]
    theory: Option<Vec<usize>>,
    #[arg(long)]
    subsumption: bool,
    /// Print wall-clock time.
    #[arg(long)]
    timing: bool,
}

const USAGE: u8 = 3;

fn load_problem(arg: &str) -> Result<Problem, String> {
    if let Some(p) = corpus::load(arg) {
        return Ok(p);
    }
    let text = std::fs::read_to_string(arg).map_err(|e| format!("{arg}: {e}"))?;
    let name = Path::new(arg)
        .file_stem()
        .map_or(arg.to_string(), |s| s.to_string_lossy().into_owned());
    parse_problem(&name, &text).map_err(|e| format!("{arg}:{e}"))
}

fn method_options(args: &MethodArgs) -> Result<(MethodOptions, RunOptions), String> {
    let selection = match args.selection.as_str() {
        "none" => SelectionFn::None,
        "all-neg" => SelectionFn::AllNegative,
        s => match s.strip_prefix("table=") {
            Some(file) => {
                let text = std::fs::read_to_string(file).map_err(|e| format!("{file}: {e}"))?;
                SelectionFn::parse_table(&text).map_err(|e| format!("{file}: {e}"))?
            }
            None => {
                return Err(format!(
                    "unknown selection `{s}` (expected none, all-neg or table=FILE)"
                ))
            }
        },
    };
    let method = MethodOptions {
        theory: args
            .theory
            .as_ref()
            .map(|ids| ids.iter().copied().collect::<BTreeSet<_>>()),
        precedence: args.precedence.clone(),
        selection,
    };
    let run = RunOptions {
        budget: args.budget,
        subsumption: args.subsumption,
        timing: args.timing,
    };
    Ok((method, run))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { 0 });
        }
    };
    match dispatch(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(USAGE)
        }
    }
}

fn dispatch(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Command::Prove {
            problem,
            method,
            opts,
        } => {
            let problem = load_problem(&problem)?;
            let (mopts, ropts) = method_options(&opts)?;
            let policy = resolve_policy(&problem, method, &mopts).map_err(|e| e.to_string())?;
            let report = run(&problem, &policy, &ropts).map_err(|e| e.to_string())?;
            print!("{report}");
            Ok(match report.outcome {
                Outcome::Refuted { .. } => 0,
                Outcome::Saturated => 1,
                Outcome::BudgetExhausted => 2,
            })
        }
        Command::Compare {
            problem,
            method,
            opts,
        } => {
            let problem = load_problem(&problem)?;
            let (mopts, ropts) = method_options(&opts)?;
            let table = compare(&problem, &method, &mopts, &ropts).map_err(|e| e.to_string())?;
            print!("{table}");
            Ok(0)
        }
        Command::Rules { problem } => {
            print!("{}", emit_rules(&load_problem(&problem)?));
            Ok(0)
        }
        Command::CheckProof { problem, proof } => {
            let problem = load_problem(&problem)?;
            let text = std::fs::read_to_string(&proof).map_err(|e| format!("{proof}: {e}"))?;
            let file = parse_proof_file(&text).map_err(|e| format!("{proof}:{e}"))?;
            match check_proof(&problem.rewrite_system(), &file.goal, &file.proof) {
                Ok(()) => {
                    println!("ok: {}", file.goal);
                    Ok(0)
                }
                Err(e) => {
                    println!("rejected {e}");
                    Ok(1)
                }
            }
        }
        Command::Cutfree {
            problem,
            goal,
            depth,
            fuel,
            terms,
        } => {
            let problem = load_problem(&problem)?;
            let (gamma, delta) = parse_sequent_sides(&goal, &mut VarTable::new())
                .map_err(|e| format!("--goal: {e}"))?;
            let goal = Sequent::new(gamma, delta);
            let terms =
                term_universe(&terms, &problem.signature).map_err(|e| format!("--terms: {e}"))?;
            let config = SearchConfig::new(depth, fuel).with_terms(terms);
            match cutfree_search(&problem.rewrite_system(), &goal, &config) {
                Some(proof) => {
                    print!("{}", print_proof_file(&ProofFile { goal, proof }));
                    Ok(0)
                }
                None => {
                    println!("none within bounds: depth={depth} fuel={fuel}");
                    Ok(1)
                }
            }
        }
    }
}
