//! Proof files:
//!
//! ```text
//! (proof (sequent "|- Q")
//!   (cut "P"
//!     (witness "Q" (trace (step pos=. rule=2 sub={})))
//!     (witness "~Q" (trace (step pos=. rule=1 sub={})))
//!     (axiom (witness "Q" (trace)) (witness "Q" (trace)))
//!     (neg-right 1 (witness "~Q" (trace))
//!       (axiom (witness "Q" (trace)) (witness "Q" (trace))))))
//! ```
//!
//! Formulas and terms are quoted. Variable names are shared by the whole
//! file, so `X` means the same variable in every string. In `sub={...}` the
//! keys name variables of the rule (`X<n>` is its variable number `n`).
//! `(inst X "B" "t")` and `(eigen X "B")` give the quantifier data of the
//! forall rules. `#` starts a comment.

use std::fmt::Write as _;

use crate::logic::{Substitution, Term, Var};
use crate::rewrite::{Prop, RewriteStep, RewriteTrace};
use crate::syntax::{
    canonical_index, parse_prop, parse_sequent_sides, parse_term, ParseError, VarTable,
};

use super::proof::{ProofTree, RuleTag, Sequent, Witness};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofFile {
    pub goal: Sequent,
    pub proof: ProofTree,
}

#[derive(Clone, Debug)]
enum Sexp {
    List(Vec<Sexp>, (usize, usize)),
    Str(String, (usize, usize)),
    Word(String, (usize, usize)),
}

impl Sexp {
    fn pos(&self) -> (usize, usize) {
        match self {
            Sexp::List(_, p) | Sexp::Str(_, p) | Sexp::Word(_, p) => *p,
        }
    }
}

fn err(at: (usize, usize), message: impl Into<String>) -> ParseError {
    ParseError {
        line: at.0,
        col: at.1,
        message: message.into(),
    }
}

fn read_sexps(text: &str) -> Result<Vec<Sexp>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let (mut i, mut line, mut col) = (0, 1, 1);
    let mut stack: Vec<(Vec<Sexp>, (usize, usize))> = vec![(Vec::new(), (1, 1))];
    let advance = |i: &mut usize, line: &mut usize, col: &mut usize| {
        if chars[*i] == '\n' {
            *line += 1;
            *col = 1;
        } else {
            *col += 1;
        }
        *i += 1;
    };
    while i < chars.len() {
        let c = chars[i];
        let at = (line, col);
        match c {
            '#' => {
                while i < chars.len() && chars[i] != '\n' {
                    advance(&mut i, &mut line, &mut col);
                }
            }
            c if c.is_whitespace() => advance(&mut i, &mut line, &mut col),
            '(' => {
                stack.push((Vec::new(), at));
                advance(&mut i, &mut line, &mut col);
            }
            ')' => {
                if stack.len() == 1 {
                    return Err(err(at, "unbalanced `)`"));
                }
                let (items, start) = stack.pop().expect("non-empty");
                stack
                    .last_mut()
                    .expect("root")
                    .0
                    .push(Sexp::List(items, start));
                advance(&mut i, &mut line, &mut col);
            }
            '"' => {
                advance(&mut i, &mut line, &mut col);
                let mut s = String::new();
                loop {
                    match chars.get(i) {
                        None => return Err(err(at, "unterminated string")),
                        Some('"') => break,
                        Some(&ch) => s.push(ch),
                    }
                    advance(&mut i, &mut line, &mut col);
                }
                advance(&mut i, &mut line, &mut col);
                stack.last_mut().expect("root").0.push(Sexp::Str(s, at));
            }
            _ => {
                let mut s = String::new();
                let mut braces = 0usize;
                while i < chars.len() {
                    let ch = chars[i];
                    if braces == 0 && (ch.is_whitespace() || ch == '(' || ch == ')' || ch == '"') {
                        break;
                    }
                    match ch {
                        '{' => braces += 1,
                        '}' => braces = braces.saturating_sub(1),
                        _ => {}
                    }
                    s.push(ch);
                    advance(&mut i, &mut line, &mut col);
                }
                if braces > 0 {
                    return Err(err(at, "unterminated `{`"));
                }
                stack.last_mut().expect("root").0.push(Sexp::Word(s, at));
            }
        }
    }
    if stack.len() > 1 {
        return Err(err(stack.last().expect("open").1, "unbalanced `(`"));
    }
    Ok(stack.pop().expect("root").0)
}

/// Largest `n` over identifiers `X<n>` in the text.
fn max_canonical(text: &str) -> Option<u32> {
    text.split(|c: char| !(c.is_alphanumeric() || c == '_' || c == '\''))
        .filter_map(canonical_index)
        .max()
}

struct Reader {
    vars: VarTable,
}

/// Positions inside a quoted string are reported relative to the file.
fn shift(e: ParseError, at: (usize, usize)) -> ParseError {
    if e.line == 1 {
        err((at.0, at.1 + e.col), e.message)
    } else {
        err((at.0 + e.line - 1, e.col), e.message)
    }
}

impl Reader {
    fn string<'a>(&self, s: &'a Sexp, what: &str) -> Result<&'a str, ParseError> {
        match s {
            Sexp::Str(text, _) => Ok(text),
            other => Err(err(other.pos(), format!("expected quoted {what}"))),
        }
    }

    fn prop(&mut self, s: &Sexp) -> Result<Prop, ParseError> {
        let text = self.string(s, "formula")?;
        parse_prop(text, &mut self.vars).map_err(|e| shift(e, s.pos()))
    }

    fn term(&mut self, s: &Sexp) -> Result<Term, ParseError> {
        let text = self.string(s, "term")?;
        parse_term(text, &mut self.vars).map_err(|e| shift(e, s.pos()))
    }

    fn var(&mut self, s: &Sexp) -> Result<Var, ParseError> {
        match s {
            Sexp::Word(w, _) if crate::syntax::is_var_name(w) => Ok(self.vars.get_or_insert(w)),
            other => Err(err(other.pos(), "expected a variable name")),
        }
    }

    fn index(&self, s: &Sexp) -> Result<usize, ParseError> {
        match s {
            Sexp::Word(w, at) => w
                .parse()
                .map_err(|_| err(*at, format!("expected a formula index, got `{w}`"))),
            other => Err(err(other.pos(), "expected a formula index")),
        }
    }

    fn head<'a>(&self, s: &'a Sexp, expected: &str) -> Result<&'a [Sexp], ParseError> {
        match s {
            Sexp::List(items, at) => match items.first() {
                Some(Sexp::Word(w, _)) if w == expected => Ok(&items[1..]),
                _ => Err(err(*at, format!("expected `({expected} ...)`"))),
            },
            other => Err(err(other.pos(), format!("expected `({expected} ...)`"))),
        }
    }

    fn witness(&mut self, s: &Sexp) -> Result<Witness, ParseError> {
        let args = self.head(s, "witness")?;
        let [target, trace] = args else {
            return Err(err(s.pos(), "witness takes a target and a trace"));
        };
        let target = self.prop(target)?;
        let trace = self.trace(trace)?;
        Ok(Witness::new(target, trace))
    }

    fn trace(&mut self, s: &Sexp) -> Result<RewriteTrace, ParseError> {
        let steps = self.head(s, "trace")?;
        let steps = steps
            .iter()
            .map(|st| self.step(st))
            .collect::<Result<_, _>>()?;
        Ok(RewriteTrace { steps })
    }

    fn step(&mut self, s: &Sexp) -> Result<RewriteStep, ParseError> {
        let fields = self.head(s, "step")?;
        let (mut path, mut rule, mut subst) = (None, None, None);
        for f in fields {
            let Sexp::Word(w, at) = f else {
                return Err(err(f.pos(), "expected `key=value`"));
            };
            let Some((key, value)) = w.split_once('=') else {
                return Err(err(*at, format!("expected `key=value`, got `{w}`")));
            };
            match key {
                "pos" => {
                    path = Some(
                        parse_path(value)
                            .ok_or_else(|| err(*at, format!("bad position `{value}`")))?,
                    )
                }
                "rule" => {
                    rule = Some(
                        value
                            .parse()
                            .map_err(|_| err(*at, format!("bad rule id `{value}`")))?,
                    )
                }
                "sub" => subst = Some(self.subst(value, *at)?),
                _ => return Err(err(*at, format!("unknown step field `{key}`"))),
            }
        }
        match (path, rule, subst) {
            (Some(path), Some(rule), Some(subst)) => Ok(RewriteStep { path, rule, subst }),
            _ => Err(err(s.pos(), "step needs pos=, rule= and sub=")),
        }
    }

    fn subst(&mut self, text: &str, at: (usize, usize)) -> Result<Substitution, ParseError> {
        let inner = text
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| err(at, "substitution must be written `{X0:=t,...}`"))?;
        let mut out = Substitution::new();
        for entry in split_top_level(inner) {
            let (key, value) = entry
                .split_once(":=")
                .ok_or_else(|| err(at, format!("bad binding `{entry}`")))?;
            let v = canonical_index(key.trim())
                .ok_or_else(|| err(at, format!("rule variable `{key}` must be X<n>")))?;
            let t = parse_term(value, &mut self.vars)
                .map_err(|e| err(at, format!("in `{entry}`: {}", e.message)))?;
            out.bind(Var(v), t);
        }
        Ok(out)
    }

    fn node(&mut self, s: &Sexp) -> Result<ProofTree, ParseError> {
        let Sexp::List(items, at) = s else {
            return Err(err(s.pos(), "expected a proof node"));
        };
        let Some(Sexp::Word(name, _)) = items.first() else {
            return Err(err(*at, "expected a rule name"));
        };
        let tag =
            RuleTag::from_name(name).ok_or_else(|| err(*at, format!("unknown rule `{name}`")))?;
        let args = &items[1..];
        let arity = match tag {
            RuleTag::Axiom => 2,
            RuleTag::Cut => 5,
            RuleTag::ContrLeft | RuleTag::ContrRight => 4,
            RuleTag::WeakLeft | RuleTag::WeakRight | RuleTag::BotLeft => 2,
            RuleTag::NegLeft | RuleTag::NegRight | RuleTag::OrRight => 3,
            RuleTag::OrLeft | RuleTag::ForallRight => 4,
            RuleTag::ForallLeft => 5,
        };
        if args.len() != arity {
            return Err(err(
                *at,
                format!("`{name}` takes {arity} arguments, got {}", args.len()),
            ));
        }
        let b = |p: ProofTree| Box::new(p);
        Ok(match tag {
            RuleTag::Axiom => ProofTree::Axiom {
                left: self.witness(&args[0])?,
                right: self.witness(&args[1])?,
            },
            RuleTag::Cut => ProofTree::Cut {
                formula: self.prop(&args[0])?,
                neg: self.witness(&args[1])?,
                pos: self.witness(&args[2])?,
                left: b(self.node(&args[3])?),
                right: b(self.node(&args[4])?),
            },
            RuleTag::ContrLeft => ProofTree::ContrLeft {
                index: self.index(&args[0])?,
                first: self.witness(&args[1])?,
                second: self.witness(&args[2])?,
                premise: b(self.node(&args[3])?),
            },
            RuleTag::ContrRight => ProofTree::ContrRight {
                index: self.index(&args[0])?,
                first: self.witness(&args[1])?,
                second: self.witness(&args[2])?,
                premise: b(self.node(&args[3])?),
            },
            RuleTag::WeakLeft => ProofTree::WeakLeft {
                index: self.index(&args[0])?,
                premise: b(self.node(&args[1])?),
            },
            RuleTag::WeakRight => ProofTree::WeakRight {
                index: self.index(&args[0])?,
                premise: b(self.node(&args[1])?),
            },
            RuleTag::BotLeft => ProofTree::BotLeft {
                index: self.index(&args[0])?,
                witness: self.witness(&args[1])?,
            },
            RuleTag::NegLeft => ProofTree::NegLeft {
                index: self.index(&args[0])?,
                witness: self.witness(&args[1])?,
                premise: b(self.node(&args[2])?),
            },
            RuleTag::NegRight => ProofTree::NegRight {
                index: self.index(&args[0])?,
                witness: self.witness(&args[1])?,
                premise: b(self.node(&args[2])?),
            },
            RuleTag::OrLeft => ProofTree::OrLeft {
                index: self.index(&args[0])?,
                witness: self.witness(&args[1])?,
                left: b(self.node(&args[2])?),
                right: b(self.node(&args[3])?),
            },
            RuleTag::OrRight => ProofTree::OrRight {
                index: self.index(&args[0])?,
                witness: self.witness(&args[1])?,
                premise: b(self.node(&args[2])?),
            },
            RuleTag::ForallLeft => {
                let index = self.index(&args[0])?;
                let witness = self.witness(&args[1])?;
                let inst = self.head(&args[2], "inst")?;
                let [var, body, term] = inst else {
                    return Err(err(
                        args[2].pos(),
                        "inst takes a variable, a body and a term",
                    ));
                };
                ProofTree::ForallLeft {
                    index,
                    witness,
                    var: self.var(var)?,
                    body: self.prop(body)?,
                    term: self.term(term)?,
                    instance: self.witness(&args[3])?,
                    premise: b(self.node(&args[4])?),
                }
            }
            RuleTag::ForallRight => {
                let index = self.index(&args[0])?;
                let witness = self.witness(&args[1])?;
                let eigen = self.head(&args[2], "eigen")?;
                let [var, body] = eigen else {
                    return Err(err(args[2].pos(), "eigen takes a variable and a body"));
                };
                ProofTree::ForallRight {
                    index,
                    witness,
                    var: self.var(var)?,
                    body: self.prop(body)?,
                    premise: b(self.node(&args[3])?),
                }
            }
        })
    }
}

fn parse_path(text: &str) -> Option<Vec<usize>> {
    if text == "." {
        return Some(Vec::new());
    }
    text.split('.').map(|p| p.parse().ok()).collect()
}

fn split_top_level(text: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0usize, 0);
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                out.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    if !text[start..].trim().is_empty() {
        out.push(&text[start..]);
    }
    out
}

pub fn parse_proof_file(text: &str) -> Result<ProofFile, ParseError> {
    let top = read_sexps(text)?;
    let [root] = top.as_slice() else {
        return Err(err((1, 1), "expected exactly one `(proof ...)` form"));
    };
    let mut r = Reader {
        vars: VarTable::canonical(max_canonical(text).map_or(0, |m| m + 1)),
    };
    let args = r.head(root, "proof")?;
    let [sequent, node] = args else {
        return Err(err(root.pos(), "proof takes a sequent and a proof node"));
    };
    let seq_args = r.head(sequent, "sequent")?;
    let [text_s] = seq_args else {
        return Err(err(sequent.pos(), "sequent takes one quoted sequent"));
    };
    let seq_text = r.string(text_s, "sequent")?;
    let (gamma, delta) =
        parse_sequent_sides(seq_text, &mut r.vars).map_err(|e| shift(e, text_s.pos()))?;
    let proof = r.node(node)?;
    Ok(ProofFile {
        goal: Sequent::new(gamma, delta),
        proof,
    })
}

fn print_witness(w: &Witness) -> String {
    format!("(witness \"{}\" {})", w.target, w.trace)
}

fn print_node(p: &ProofTree, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    let _ = write!(out, "{pad}({}", p.tag().name());
    match p {
        ProofTree::Axiom { left, right } => {
            let _ = write!(out, " {} {}", print_witness(left), print_witness(right));
        }
        ProofTree::Cut {
            formula, neg, pos, ..
        } => {
            let _ = write!(
                out,
                " \"{formula}\" {} {}",
                print_witness(neg),
                print_witness(pos)
            );
        }
        ProofTree::ContrLeft {
            index,
            first,
            second,
            ..
        }
        | ProofTree::ContrRight {
            index,
            first,
            second,
            ..
        } => {
            let _ = write!(
                out,
                " {index} {} {}",
                print_witness(first),
                print_witness(second)
            );
        }
        ProofTree::WeakLeft { index, .. } | ProofTree::WeakRight { index, .. } => {
            let _ = write!(out, " {index}");
        }
        ProofTree::BotLeft { index, witness }
        | ProofTree::NegLeft { index, witness, .. }
        | ProofTree::NegRight { index, witness, .. }
        | ProofTree::OrLeft { index, witness, .. }
        | ProofTree::OrRight { index, witness, .. } => {
            let _ = write!(out, " {index} {}", print_witness(witness));
        }
        ProofTree::ForallLeft {
            index,
            witness,
            var,
            body,
            term,
            instance,
            ..
        } => {
            let _ = write!(
                out,
                " {index} {} (inst {var} \"{body}\" \"{term}\") {}",
                print_witness(witness),
                print_witness(instance)
            );
        }
        ProofTree::ForallRight {
            index,
            witness,
            var,
            body,
            ..
        } => {
            let _ = write!(
                out,
                " {index} {} (eigen {var} \"{body}\")",
                print_witness(witness)
            );
        }
    }
    for child in p.children() {
        out.push('\n');
        print_node(child, indent + 1, out);
    }
    out.push(')');
}

/// Inverse of [`parse_proof_file`] up to a consistent renaming of variables.
pub fn print_proof_file(file: &ProofFile) -> String {
    let mut out = format!("(proof (sequent \"{}\")\n", file.goal);
    print_node(&file.proof, 1, &mut out);
    out.push_str(")\n");
    out
}
