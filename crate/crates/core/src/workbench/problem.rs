use std::fmt;

use crate::logic::{Atom, Clause, Signature};
use crate::rewrite::{theory_rules, PolarizedRule, Prop, RewriteSystem};
use crate::syntax::{ParseError, Parser, Tok, VarTable};

/// A set of clauses to refute. Theory lines become one-way clauses; explicit
/// `rule` lines extend the rewrite system derived from them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Problem {
    pub name: String,
    /// Ids `1..=n` in input order.
    pub clauses: Vec<Clause>,
    pub rules: Vec<PolarizedRule>,
    pub signature: Signature,
}

impl Problem {
    pub fn theory(&self) -> impl Iterator<Item = &Clause> {
        self.clauses.iter().filter(|c| c.is_one_way())
    }

    /// Explicit rules first, then one rule per theory clause in input order.
    pub fn rewrite_system(&self) -> RewriteSystem {
        let mut sys = RewriteSystem::from_rules(self.rules.iter().cloned());
        for r in theory_rules(&self.clauses).rules() {
            sys.push(r.clone());
        }
        sys
    }
}

fn atoms_of(p: &Prop, out: &mut Vec<Atom>) {
    match p {
        Prop::Atom(a) => out.push(a.clone()),
        Prop::Falsum => {}
        Prop::Not(q) | Prop::Forall(_, q) => atoms_of(q, out),
        Prop::Or(a, b) => {
            atoms_of(a, out);
            atoms_of(b, out);
        }
    }
}

/// Parses the problem format:
///
/// ```text
/// theory P* | Q.      # one-way clause, `*` marks the selected literal
/// clause -Q.          # ordinary clause
/// rule- P -> Q.       # explicit polarized rewrite rule
/// ```
pub fn parse_problem(name: &str, text: &str) -> Result<Problem, ParseError> {
    let mut vars = VarTable::new();
    let mut p = Parser::new(text, &mut vars)?;
    let mut clauses = Vec::new();
    let mut rules = Vec::new();
    let mut signature = Signature::new();
    while !p.at_end() {
        p.vars.clear();
        let start = p.here();
        let keyword = p.ident()?;
        match keyword.as_str() {
            "theory" | "clause" => {
                let mut literals = Vec::new();
                let mut selected = Vec::new();
                loop {
                    let at = p.here();
                    let (lit, starred) = p.literal()?;
                    if starred {
                        selected.push((at, literals.len()));
                    }
                    signature
                        .add_atom(&lit.atom)
                        .map_err(|e| p.error_at(at, e.to_string()))?;
                    literals.push(lit);
                    if !p.eat(&Tok::Bar) {
                        break;
                    }
                }
                p.expect(&Tok::Dot)?;
                let id = clauses.len() + 1;
                if keyword == "clause" {
                    if let Some(&(at, _)) = selected.first() {
                        return Err(p.error_at(at, "selection mark `*` outside a theory line"));
                    }
                    clauses.push(Clause::new(id, literals));
                } else {
                    match selected.as_slice() {
                        [] => return Err(p.error_at(start, "theory clause lacks selected literal")),
                        [(_, pos)] => clauses.push(Clause::one_way(id, literals, *pos)),
                        [_, (second, _), ..] => {
                            return Err(p.error_at(*second, "more than one selected literal"))
                        }
                    }
                }
            }
            "rule" => {
                let sign = p.sign()?;
                let at = p.here();
                let lhs = p.atom()?;
                p.expect(&Tok::Arrow)?;
                let rhs = p.prop()?;
                p.expect(&Tok::Dot)?;
                let mut atoms = vec![lhs.clone()];
                atoms_of(&rhs, &mut atoms);
                for a in &atoms {
                    signature
                        .add_atom(a)
                        .map_err(|e| p.error_at(at, e.to_string()))?;
                }
                let rule = PolarizedRule::new(rules.len() + 1, sign, lhs, rhs)
                    .map_err(|e| p.error_at(at, e.to_string()))?;
                rules.push(rule);
            }
            other => {
                return Err(p.error_at(
                    start,
                    format!("expected `theory`, `clause` or `rule`, found `{other}`"),
                ))
            }
        }
    }
    Ok(Problem {
        name: name.to_string(),
        clauses,
        rules,
        signature,
    })
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.clauses {
            let kw = if c.is_one_way() { "theory" } else { "clause" };
            writeln!(f, "{kw} {c}.")?;
        }
        for r in &self.rules {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}
