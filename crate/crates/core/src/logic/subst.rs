use std::collections::BTreeMap;
use std::fmt;

use super::term::{Atom, Literal, Term, Var};

/// Finite mapping from variables to terms. Identity bindings are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Substitution {
    map: BTreeMap<Var, Term>,
}

/// Values a substitution can be applied to.
pub trait Substitute: Sized {
    fn substitute(&self, s: &Substitution) -> Self;
}

impl Substitution {
    pub fn new() -> Substitution {
        Substitution::default()
    }

    pub fn singleton(v: Var, t: Term) -> Substitution {
        let mut s = Substitution::new();
        s.bind(v, t);
        s
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, Term)>) -> Substitution {
        let mut s = Substitution::new();
        for (v, t) in pairs {
            s.bind(v, t);
        }
        s
    }

    /// Adds (or overwrites) a binding; `x := x` is dropped.
    pub fn bind(&mut self, v: Var, t: Term) {
        if t == Term::Var(v) {
            self.map.remove(&v);
        } else {
            self.map.insert(v, t);
        }
    }

    pub fn get(&self, v: Var) -> Option<&Term> {
        self.map.get(&v)
    }

    pub fn remove(&mut self, v: Var) -> Option<Term> {
        self.map.remove(&v)
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Var, &Term)> {
        self.map.iter()
    }

    pub fn domain(&self) -> impl Iterator<Item = Var> + '_ {
        self.map.keys().copied()
    }

    pub fn apply<T: Substitute>(&self, x: &T) -> T {
        x.substitute(self)
    }

    /// The substitution that applies `self` first and then `next`.
    pub fn then(&self, next: &Substitution) -> Substitution {
        let mut out = Substitution::new();
        for (v, t) in &self.map {
            out.bind(*v, next.apply(t));
        }
        for (v, t) in &next.map {
            if !self.map.contains_key(v) {
                out.bind(*v, t.clone());
            }
        }
        out
    }

    pub fn is_idempotent(&self) -> bool {
        self.then(self) == *self
    }

    /// True when every binding maps to a distinct variable.
    pub fn is_renaming(&self) -> bool {
        let mut seen = Vec::new();
        self.map.values().all(|t| match t {
            Term::Var(w) if !seen.contains(w) => {
                seen.push(*w);
                true
            }
            _ => false,
        })
    }

    pub fn restrict(&self, keep: impl Fn(Var) -> bool) -> Substitution {
        Substitution {
            map: self
                .map
                .iter()
                .filter(|(v, _)| keep(**v))
                .map(|(v, t)| (*v, t.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for Substitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (v, t)) in self.map.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}:={t}")?;
        }
        f.write_str("}")
    }
}

impl Substitute for Term {
    fn substitute(&self, s: &Substitution) -> Term {
        match self {
            Term::Var(v) => s.get(*v).cloned().unwrap_or_else(|| self.clone()),
            Term::App(f, args) => {
                Term::App(f.clone(), args.iter().map(|a| a.substitute(s)).collect())
            }
        }
    }
}

impl Substitute for Atom {
    fn substitute(&self, s: &Substitution) -> Atom {
        Atom {
            pred: self.pred.clone(),
            args: self.args.iter().map(|a| a.substitute(s)).collect(),
        }
    }
}

impl Substitute for Literal {
    fn substitute(&self, s: &Substitution) -> Literal {
        Literal {
            positive: self.positive,
            atom: self.atom.substitute(s),
        }
    }
}

impl<T: Substitute> Substitute for Vec<T> {
    fn substitute(&self, s: &Substitution) -> Vec<T> {
        self.iter().map(|x| x.substitute(s)).collect()
    }
}
