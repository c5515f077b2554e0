use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::subst::{Substitute, Substitution};
use super::term::{HasVars, Literal, Term, Var};

/// Clause ids are 1-based; input clauses take `1..=n` in input order.
pub type ClauseId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    Ordinary,
    /// A theory clause whose literal at `selected` is the only one that may be resolved upon.
    OneWay {
        selected: usize,
    },
}

impl Role {
    pub fn is_one_way(&self) -> bool {
        matches!(self, Role::OneWay { .. })
    }

    pub fn selected(&self) -> Option<usize> {
        match self {
            Role::OneWay { selected } => Some(*selected),
            Role::Ordinary => None,
        }
    }
}

/// How a clause came to be.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    Input,
    /// Binary resolution between `left` and a copy of `right` renamed by `renaming`.
    /// The literal at `left_pos` and the one at `right_pos` are resolved upon; the
    /// conclusion is `unifier` applied to the rest of `left` followed by the rest
    /// of the renamed `right`.
    Resolvent {
        left: ClauseId,
        right: ClauseId,
        left_pos: usize,
        right_pos: usize,
        renaming: Substitution,
        unifier: Substitution,
    },
    /// Binary factoring: `unifier` applied to `parent` with the literal at `drop` removed.
    Factor {
        parent: ClauseId,
        keep: usize,
        drop: usize,
        unifier: Substitution,
    },
}

impl Provenance {
    pub fn parents(&self) -> Vec<ClauseId> {
        match self {
            Provenance::Input => Vec::new(),
            Provenance::Resolvent { left, right, .. } => vec![*left, *right],
            Provenance::Factor { parent, .. } => vec![*parent],
        }
    }
}

/// A multiset of literals read disjunctively.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Clause {
    pub id: ClauseId,
    pub literals: Vec<Literal>,
    pub role: Role,
    pub provenance: Provenance,
}

impl Clause {
    pub fn new(id: ClauseId, literals: Vec<Literal>) -> Clause {
        Clause {
            id,
            literals,
            role: Role::Ordinary,
            provenance: Provenance::Input,
        }
    }

    pub fn one_way(id: ClauseId, literals: Vec<Literal>, selected: usize) -> Clause {
        assert!(selected < literals.len(), "selected literal out of range");
        Clause {
            id,
            literals,
            role: Role::OneWay { selected },
            provenance: Provenance::Input,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.literals.is_empty()
    }

    pub fn len(&self) -> usize {
        self.literals.len()
    }

    pub fn is_one_way(&self) -> bool {
        self.role.is_one_way()
    }

    pub fn selected(&self) -> Option<usize> {
        self.role.selected()
    }

    pub fn is_ground(&self) -> bool {
        self.literals.iter().all(|l| l.atom.is_ground())
    }

    pub fn var_set(&self) -> BTreeSet<Var> {
        self.vars().into_iter().collect()
    }

    /// Literals other than the one at `pos`, in order.
    pub fn without(&self, pos: usize) -> Vec<Literal> {
        self.literals
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != pos)
            .map(|(_, l)| l.clone())
            .collect()
    }
}

impl HasVars for Clause {
    fn collect_vars(&self, out: &mut Vec<Var>) {
        self.literals.collect_vars(out);
    }
}

/// Applies literal-wise; id, role and provenance are kept.
impl Substitute for Clause {
    fn substitute(&self, s: &Substitution) -> Clause {
        Clause {
            id: self.id,
            literals: self.literals.substitute(s),
            role: self.role,
            provenance: self.provenance.clone(),
        }
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.literals.is_empty() {
            return f.write_str("⊥");
        }
        for (i, l) in self.literals.iter().enumerate() {
            if i > 0 {
                f.write_str(" | ")?;
            }
            write!(f, "{l}")?;
            if self.selected() == Some(i) {
                f.write_str("*")?;
            }
        }
        Ok(())
    }
}

/// A renaming of the variables of `c` that also occur in `reserved`. Fresh
/// variables are numbered above everything in `c` and `reserved`, so the
/// choice is deterministic.
pub fn renaming_apart(c: &Clause, reserved: &BTreeSet<Var>) -> Substitution {
    let vars = c.vars();
    let mut next = vars
        .iter()
        .chain(reserved.iter())
        .map(|v| v.0 + 1)
        .max()
        .unwrap_or(0);
    let mut s = Substitution::new();
    for v in vars {
        if reserved.contains(&v) {
            s.bind(v, Term::Var(Var(next)));
            next += 1;
        }
    }
    s
}

/// A variant of `c` sharing no variable with `reserved`.
pub fn rename_apart(c: &Clause, reserved: &BTreeSet<Var>) -> Clause {
    renaming_apart(c, reserved).apply(c)
}

/// True iff a bijective variable renaming maps the literal multiset of `a` onto `b`'s.
pub fn is_variant(a: &Clause, b: &Clause) -> bool {
    literals_variant(&a.literals, &b.literals)
}

pub fn literals_variant(a: &[Literal], b: &[Literal]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    let mut fwd = BTreeMap::new();
    let mut bwd = BTreeMap::new();
    variant_search(a, b, 0, &mut used, &mut fwd, &mut bwd)
}

fn variant_search(
    a: &[Literal],
    b: &[Literal],
    i: usize,
    used: &mut [bool],
    fwd: &mut BTreeMap<Var, Var>,
    bwd: &mut BTreeMap<Var, Var>,
) -> bool {
    if i == a.len() {
        return true;
    }
    for j in 0..b.len() {
        if used[j] || a[i].positive != b[j].positive || a[i].atom.pred != b[j].atom.pred {
            continue;
        }
        let (f_snap, b_snap) = (fwd.clone(), bwd.clone());
        let ok = a[i]
            .atom
            .args
            .iter()
            .zip(&b[j].atom.args)
            .all(|(s, t)| rename_match(s, t, fwd, bwd));
        if ok {
            used[j] = true;
            if variant_search(a, b, i + 1, used, fwd, bwd) {
                return true;
            }
            used[j] = false;
        }
        *fwd = f_snap;
        *bwd = b_snap;
    }
    false
}

fn rename_match(
    s: &Term,
    t: &Term,
    fwd: &mut BTreeMap<Var, Var>,
    bwd: &mut BTreeMap<Var, Var>,
) -> bool {
    match (s, t) {
        (Term::Var(x), Term::Var(y)) => match (fwd.get(x), bwd.get(y)) {
            (None, None) => {
                fwd.insert(*x, *y);
                bwd.insert(*y, *x);
                true
            }
            (Some(y2), Some(x2)) => y2 == y && x2 == x,
            _ => false,
        },
        (Term::App(f, xs), Term::App(g, ys)) => {
            f == g
                && xs.len() == ys.len()
                && xs.iter().zip(ys).all(|(s, t)| rename_match(s, t, fwd, bwd))
        }
        _ => false,
    }
}

/// Multiset subsumption: some `s` maps every literal of `a` to a distinct literal of `b`.
pub fn subsumes(a: &Clause, b: &Clause) -> bool {
    if a.len() > b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    subsume_search(&a.literals, &b.literals, 0, &mut used, &Substitution::new())
}

fn subsume_search(
    a: &[Literal],
    b: &[Literal],
    i: usize,
    used: &mut [bool],
    s: &Substitution,
) -> bool {
    if i == a.len() {
        return true;
    }
    let lit = s.apply(&a[i]);
    for j in 0..b.len() {
        if used[j] || lit.positive != b[j].positive {
            continue;
        }
        if let Some(m) = super::unify::match_atom(&lit.atom, &b[j].atom) {
            used[j] = true;
            if subsume_search(a, b, i + 1, used, &s.then(&m)) {
                return true;
            }
            used[j] = false;
        }
    }
    false
}
