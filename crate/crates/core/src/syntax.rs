//! Text syntax shared by problem files, proof files and the command line.
//!
//! ```text
//! line   := "theory" clause "." | "clause" clause "." | "rule" sign atom "->" prop "."
//! clause := lit ("|" lit)*
//! lit    := ["-"] atom ["*"]
//! atom   := ident [ "(" term ("," term)* ")" ]
//! sign   := "+" | "-"
//! prop   := "false" | atom | "~" prop | "(" prop "\/" prop ")" | "forall" VAR "." prop
//! ```
//!
//! In term position a bare identifier starting with an uppercase letter is a
//! variable; anything followed by `(` is a function application and every
//! other identifier is a constant. `#` starts a comment.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::logic::{Atom, Literal, Term, Var};
use crate::rewrite::{Prop, Sign};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tok {
    Ident(String),
    LParen,
    RParen,
    Comma,
    Bar,
    Minus,
    Plus,
    Star,
    Dot,
    Tilde,
    Vee,
    Arrow,
    Turnstile,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Bar => f.write_str("`|`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Dot => f.write_str("`.`"),
            Tok::Tilde => f.write_str("`~`"),
            Tok::Vee => f.write_str("`\\/`"),
            Tok::Arrow => f.write_str("`->`"),
            Tok::Turnstile => f.write_str("`|-`"),
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Spanned {
    pub tok: Tok,
    pub line: usize,
    pub col: usize,
}

pub(crate) fn lex(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let col = i + 1;
            let push = |out: &mut Vec<Spanned>, tok| {
                out.push(Spanned {
                    tok,
                    line: lineno + 1,
                    col,
                })
            };
            if c == '#' {
                break;
            }
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            if c.is_alphanumeric() || c == '_' {
                let start = i;
                while i < chars.len()
                    && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'')
                {
                    i += 1;
                }
                push(&mut out, Tok::Ident(chars[start..i].iter().collect()));
                continue;
            }
            let next = chars.get(i + 1).copied();
            let (tok, width) = match (c, next) {
                ('-', Some('>')) => (Tok::Arrow, 2),
                ('|', Some('-')) => (Tok::Turnstile, 2),
                ('\\', Some('/')) => (Tok::Vee, 2),
                ('(', _) => (Tok::LParen, 1),
                (')', _) => (Tok::RParen, 1),
                (',', _) => (Tok::Comma, 1),
                ('|', _) => (Tok::Bar, 1),
                ('-', _) => (Tok::Minus, 1),
                ('+', _) => (Tok::Plus, 1),
                ('*', _) => (Tok::Star, 1),
                ('.', _) => (Tok::Dot, 1),
                ('~', _) => (Tok::Tilde, 1),
                _ => {
                    return Err(ParseError {
                        line: lineno + 1,
                        col,
                        message: format!("unexpected character `{c}`"),
                    })
                }
            };
            push(&mut out, tok);
            i += width;
        }
    }
    Ok(out)
}

/// Names to variables. Quantifiers shadow outer bindings of the same name.
#[derive(Clone, Debug, Default)]
pub struct VarTable {
    names: HashMap<String, Var>,
    next: u32,
    canonical: bool,
}

impl VarTable {
    pub fn new() -> VarTable {
        VarTable::default()
    }

    /// One variable per name, bound or free, with `X<n>` read as variable
    /// number `n`. Other names are numbered from `next` up. Used where the
    /// same variable must be named from several separately parsed strings.
    pub fn canonical(next: u32) -> VarTable {
        VarTable {
            names: HashMap::new(),
            next,
            canonical: true,
        }
    }

    /// Variables are numbered from 0 in first-occurrence order.
    pub fn get_or_insert(&mut self, name: &str) -> Var {
        if let Some(v) = self.names.get(name) {
            return *v;
        }
        if self.canonical {
            if let Some(n) = canonical_index(name) {
                return Var(n);
            }
        }
        let v = self.fresh();
        self.names.insert(name.to_string(), v);
        v
    }

    pub fn fresh(&mut self) -> Var {
        let v = Var(self.next);
        self.next += 1;
        v
    }

    fn shadow(&mut self, name: &str) -> (Var, Option<Var>) {
        if self.canonical {
            let v = self.get_or_insert(name);
            return (v, Some(v));
        }
        let v = self.fresh();
        (v, self.names.insert(name.to_string(), v))
    }

    fn unshadow(&mut self, name: &str, previous: Option<Var>) {
        match previous {
            Some(p) => {
                self.names.insert(name.to_string(), p);
            }
            None => {
                self.names.remove(name);
            }
        }
    }

    pub fn clear(&mut self) {
        self.names.clear();
        self.next = 0;
    }
}

/// `n` for names of the form `X<n>`.
pub(crate) fn canonical_index(name: &str) -> Option<u32> {
    let digits = name.strip_prefix('X')?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok()
}

pub(crate) fn is_var_name(s: &str) -> bool {
    s.chars().next().is_some_and(|c| c.is_uppercase())
}

pub(crate) struct Parser<'v> {
    toks: Vec<Spanned>,
    pos: usize,
    end: (usize, usize),
    pub vars: &'v mut VarTable,
}

impl<'v> Parser<'v> {
    pub fn new(text: &str, vars: &'v mut VarTable) -> Result<Parser<'v>, ParseError> {
        let toks = lex(text)?;
        let lines = text.lines().count().max(1);
        let last_len = text.lines().last().map_or(0, |l| l.chars().count());
        Ok(Parser {
            toks,
            pos: 0,
            end: (lines, last_len + 1),
            vars,
        })
    }

    pub fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    pub fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    pub fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .map_or(self.end, |s| (s.line, s.col))
    }

    pub fn error_at(&self, at: (usize, usize), message: impl Into<String>) -> ParseError {
        ParseError {
            line: at.0,
            col: at.1,
            message: message.into(),
        }
    }

    pub fn error(&self, message: impl Into<String>) -> ParseError {
        self.error_at(self.here(), message)
    }

    fn unexpected(&self, wanted: &str) -> ParseError {
        match self.peek() {
            Some(t) => self.error(format!("expected {wanted}, found {t}")),
            None => self.error(format!("expected {wanted}, found end of input")),
        }
    }

    pub fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, t: &Tok) -> Result<(), ParseError> {
        if self.eat(t) {
            Ok(())
        } else {
            Err(self.unexpected(&t.to_string()))
        }
    }

    pub fn ident(&mut self) -> Result<String, ParseError> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => Err(self.unexpected("an identifier")),
        }
    }

    pub fn peek_keyword(&self, kw: &str) -> bool {
        matches!(self.peek(), Some(Tok::Ident(s)) if s == kw)
    }

    pub fn term(&mut self) -> Result<Term, ParseError> {
        let name = self.ident()?;
        if self.eat(&Tok::LParen) {
            let args = self.term_list()?;
            self.expect(&Tok::RParen)?;
            return Ok(Term::App(name.as_str().into(), args));
        }
        if is_var_name(&name) {
            Ok(Term::Var(self.vars.get_or_insert(&name)))
        } else {
            Ok(Term::App(name.as_str().into(), Vec::new()))
        }
    }

    fn term_list(&mut self) -> Result<Vec<Term>, ParseError> {
        let mut args = vec![self.term()?];
        while self.eat(&Tok::Comma) {
            args.push(self.term()?);
        }
        Ok(args)
    }

    pub fn atom(&mut self) -> Result<Atom, ParseError> {
        let name = self.ident()?;
        let args = if self.eat(&Tok::LParen) {
            let args = self.term_list()?;
            self.expect(&Tok::RParen)?;
            args
        } else {
            Vec::new()
        };
        Ok(Atom {
            pred: name.as_str().into(),
            args,
        })
    }

    /// A literal and whether it carries the selection mark.
    pub fn literal(&mut self) -> Result<(Literal, bool), ParseError> {
        let positive = !self.eat(&Tok::Minus);
        let atom = self.atom()?;
        let starred = self.eat(&Tok::Star);
        Ok((Literal { positive, atom }, starred))
    }

    pub fn prop(&mut self) -> Result<Prop, ParseError> {
        if self.eat(&Tok::Tilde) {
            return Ok(Prop::not(self.prop()?));
        }
        if self.eat(&Tok::LParen) {
            let a = self.prop()?;
            self.expect(&Tok::Vee)?;
            let b = self.prop()?;
            self.expect(&Tok::RParen)?;
            return Ok(Prop::or(a, b));
        }
        if self.peek_keyword("false") {
            self.pos += 1;
            return Ok(Prop::Falsum);
        }
        if self.peek_keyword("forall") {
            self.pos += 1;
            let at = self.here();
            let name = self.ident()?;
            if !is_var_name(&name) {
                return Err(self.error_at(at, format!("`{name}` is not a variable name")));
            }
            self.expect(&Tok::Dot)?;
            let (v, previous) = self.vars.shadow(&name);
            let body = self.prop();
            self.vars.unshadow(&name, previous);
            return Ok(Prop::forall(v, body?));
        }
        Ok(Prop::Atom(self.atom()?))
    }

    pub fn sign(&mut self) -> Result<Sign, ParseError> {
        if self.eat(&Tok::Plus) {
            Ok(Sign::Plus)
        } else if self.eat(&Tok::Minus) {
            Ok(Sign::Minus)
        } else {
            Err(self.unexpected("`+` or `-`"))
        }
    }

    pub fn finish(&self) -> Result<(), ParseError> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.unexpected("end of input"))
        }
    }

    fn prop_list_until(&mut self, stop: Option<&Tok>) -> Result<Vec<Prop>, ParseError> {
        let mut out = Vec::new();
        if self.at_end() || (stop.is_some() && self.peek() == stop) {
            return Ok(out);
        }
        out.push(self.prop()?);
        while self.eat(&Tok::Comma) {
            out.push(self.prop()?);
        }
        Ok(out)
    }
}

/// Parses a formula. Variable names are resolved through `vars`.
pub fn parse_prop(text: &str, vars: &mut VarTable) -> Result<Prop, ParseError> {
    let mut p = Parser::new(text, vars)?;
    let out = p.prop()?;
    p.finish()?;
    Ok(out)
}

pub fn parse_term(text: &str, vars: &mut VarTable) -> Result<Term, ParseError> {
    let mut p = Parser::new(text, vars)?;
    let out = p.term()?;
    p.finish()?;
    Ok(out)
}

pub fn parse_atom(text: &str, vars: &mut VarTable) -> Result<Atom, ParseError> {
    let mut p = Parser::new(text, vars)?;
    let out = p.atom()?;
    p.finish()?;
    Ok(out)
}

/// Comma-separated terms, as given to `--terms`.
pub fn parse_terms(text: &str, vars: &mut VarTable) -> Result<Vec<Term>, ParseError> {
    let mut p = Parser::new(text, vars)?;
    if p.at_end() {
        return Ok(Vec::new());
    }
    let out = p.term_list()?;
    p.finish()?;
    Ok(out)
}

/// `A, B |- C, D`; either side may be empty.
pub fn parse_sequent_sides(
    text: &str,
    vars: &mut VarTable,
) -> Result<(Vec<Prop>, Vec<Prop>), ParseError> {
    let mut p = Parser::new(text, vars)?;
    let left = p.prop_list_until(Some(&Tok::Turnstile))?;
    p.expect(&Tok::Turnstile)?;
    let right = p.prop_list_until(None)?;
    p.finish()?;
    Ok((left, right))
}
