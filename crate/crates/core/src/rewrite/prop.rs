use std::fmt;

use crate::logic::{Atom, HasVars, Substitute, Substitution, Term, Var};

/// Formulas over atoms, falsum, negation, disjunction and universal quantification.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Prop {
    Atom(Atom),
    Falsum,
    Not(Box<Prop>),
    Or(Box<Prop>, Box<Prop>),
    Forall(Var, Box<Prop>),
}

/// Polarity of an occurrence, or the sign of a rewrite rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Child indices from the root: `Not` and `Forall` have child 0, `Or` has 0 and 1.
pub type Path = Vec<usize>;

impl Prop {
    pub fn atom(a: Atom) -> Prop {
        Prop::Atom(a)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(p: Prop) -> Prop {
        Prop::Not(Box::new(p))
    }

    pub fn or(a: Prop, b: Prop) -> Prop {
        Prop::Or(Box::new(a), Box::new(b))
    }

    pub fn forall(v: Var, body: Prop) -> Prop {
        Prop::Forall(v, Box::new(body))
    }

    pub fn is_atomic(&self) -> bool {
        matches!(self, Prop::Atom(_))
    }

    pub fn at(&self, path: &[usize]) -> Option<&Prop> {
        let Some((&first, rest)) = path.split_first() else {
            return Some(self);
        };
        match (self, first) {
            (Prop::Not(p), 0)
            | (Prop::Forall(_, p), 0)
            | (Prop::Or(p, _), 0)
            | (Prop::Or(_, p), 1) => p.at(rest),
            _ => None,
        }
    }

    /// Replaces the subformula at `path`. `None` if the path is invalid.
    pub fn replace_at(&self, path: &[usize], new: Prop) -> Option<Prop> {
        let Some((&first, rest)) = path.split_first() else {
            return Some(new);
        };
        Some(match (self, first) {
            (Prop::Not(p), 0) => Prop::not(p.replace_at(rest, new)?),
            (Prop::Forall(v, p), 0) => Prop::forall(*v, p.replace_at(rest, new)?),
            (Prop::Or(a, b), 0) => Prop::or(a.replace_at(rest, new)?, (**b).clone()),
            (Prop::Or(a, b), 1) => Prop::or((**a).clone(), b.replace_at(rest, new)?),
            _ => return None,
        })
    }

    /// Sign of the occurrence at `path` when the whole formula has sign `start`.
    pub fn polarity_at(&self, path: &[usize], start: Sign) -> Option<Sign> {
        let Some((&first, rest)) = path.split_first() else {
            return Some(start);
        };
        match (self, first) {
            (Prop::Not(p), 0) => p.polarity_at(rest, start.flip()),
            (Prop::Forall(_, p), 0) | (Prop::Or(p, _), 0) | (Prop::Or(_, p), 1) => {
                p.polarity_at(rest, start)
            }
            _ => None,
        }
    }

    /// Every atomic occurrence with its path and polarity, in pre-order.
    pub fn atomic_positions(&self, start: Sign) -> Vec<(Path, Sign, &Atom)> {
        let mut out = Vec::new();
        self.walk_atoms(&mut Vec::new(), start, &mut out);
        out
    }

    fn walk_atoms<'a>(
        &'a self,
        path: &mut Path,
        sign: Sign,
        out: &mut Vec<(Path, Sign, &'a Atom)>,
    ) {
        match self {
            Prop::Atom(a) => out.push((path.clone(), sign, a)),
            Prop::Falsum => {}
            Prop::Not(p) => {
                path.push(0);
                p.walk_atoms(path, sign.flip(), out);
                path.pop();
            }
            Prop::Forall(_, p) => {
                path.push(0);
                p.walk_atoms(path, sign, out);
                path.pop();
            }
            Prop::Or(a, b) => {
                path.push(0);
                a.walk_atoms(path, sign, out);
                path.pop();
                path.push(1);
                b.walk_atoms(path, sign, out);
                path.pop();
            }
        }
    }

    pub fn free_vars(&self) -> Vec<Var> {
        let mut out = Vec::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<Var>, out: &mut Vec<Var>) {
        match self {
            Prop::Atom(a) => {
                for v in a.vars() {
                    if !bound.contains(&v) && !out.contains(&v) {
                        out.push(v);
                    }
                }
            }
            Prop::Falsum => {}
            Prop::Not(p) => p.collect_free(bound, out),
            Prop::Or(a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            Prop::Forall(v, p) => {
                bound.push(*v);
                p.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    /// Largest variable id anywhere in the formula, free or bound.
    pub fn max_var(&self) -> Option<u32> {
        match self {
            Prop::Atom(a) => a.vars().iter().map(|v| v.0).max(),
            Prop::Falsum => None,
            Prop::Not(p) => p.max_var(),
            Prop::Or(a, b) => a.max_var().max(b.max_var()),
            Prop::Forall(v, p) => Some(v.0).max(p.max_var()),
        }
    }

    /// Equality up to renaming of bound variables.
    pub fn alpha_eq(&self, other: &Prop) -> bool {
        alpha(self, other, &mut Vec::new())
    }

    pub fn size(&self) -> usize {
        match self {
            Prop::Atom(a) => a.size(),
            Prop::Falsum => 1,
            Prop::Not(p) | Prop::Forall(_, p) => 1 + p.size(),
            Prop::Or(a, b) => 1 + a.size() + b.size(),
        }
    }
}

fn alpha(a: &Prop, b: &Prop, env: &mut Vec<(Var, Var)>) -> bool {
    match (a, b) {
        (Prop::Atom(x), Prop::Atom(y)) => {
            x.pred == y.pred
                && x.args.len() == y.args.len()
                && x.args
                    .iter()
                    .zip(&y.args)
                    .all(|(s, t)| alpha_term(s, t, env))
        }
        (Prop::Falsum, Prop::Falsum) => true,
        (Prop::Not(x), Prop::Not(y)) => alpha(x, y, env),
        (Prop::Or(x1, x2), Prop::Or(y1, y2)) => alpha(x1, y1, env) && alpha(x2, y2, env),
        (Prop::Forall(v, x), Prop::Forall(w, y)) => {
            env.push((*v, *w));
            let r = alpha(x, y, env);
            env.pop();
            r
        }
        _ => false,
    }
}

fn alpha_term(s: &Term, t: &Term, env: &[(Var, Var)]) -> bool {
    match (s, t) {
        (Term::Var(x), Term::Var(y)) => {
            // innermost binder wins
            let bx = env.iter().rev().position(|(l, _)| l == x);
            let by = env.iter().rev().position(|(_, r)| r == y);
            match (bx, by) {
                (Some(i), Some(j)) => i == j,
                (None, None) => x == y,
                _ => false,
            }
        }
        (Term::App(f, xs), Term::App(g, ys)) => {
            f == g && xs.len() == ys.len() && xs.iter().zip(ys).all(|(a, b)| alpha_term(a, b, env))
        }
        _ => false,
    }
}

/// Capture-avoiding instantiation of free variables.
impl Substitute for Prop {
    fn substitute(&self, s: &Substitution) -> Prop {
        match self {
            Prop::Atom(a) => Prop::Atom(s.apply(a)),
            Prop::Falsum => Prop::Falsum,
            Prop::Not(p) => Prop::not(p.substitute(s)),
            Prop::Or(a, b) => Prop::or(a.substitute(s), b.substitute(s)),
            Prop::Forall(v, body) => {
                let inner = s.restrict(|x| x != *v);
                if inner.is_empty() {
                    return self.clone();
                }
                let free = body.free_vars();
                let captures = free
                    .iter()
                    .filter(|x| **x != *v)
                    .filter_map(|x| inner.get(*x))
                    .any(|t| t.occurs(*v));
                if !captures {
                    return Prop::forall(*v, body.substitute(&inner));
                }
                let fresh = Var(fresh_above(body, &inner).max(v.0 + 1));
                let renamed = body.substitute(&Substitution::singleton(*v, Term::Var(fresh)));
                Prop::forall(fresh, renamed.substitute(&inner))
            }
        }
    }
}

fn fresh_above(body: &Prop, s: &Substitution) -> u32 {
    let mut m = body.max_var().map_or(0, |x| x + 1);
    for (v, t) in s.iter() {
        m = m.max(v.0 + 1);
        for w in t.vars() {
            m = m.max(w.0 + 1);
        }
    }
    m
}

impl fmt::Display for Prop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Prop::Atom(a) => write!(f, "{a}"),
            Prop::Falsum => f.write_str("false"),
            Prop::Not(p) => write!(f, "~{p}"),
            Prop::Or(a, b) => write!(f, "({a} \\/ {b})"),
            Prop::Forall(v, p) => write!(f, "forall {v}. {p}"),
        }
    }
}
