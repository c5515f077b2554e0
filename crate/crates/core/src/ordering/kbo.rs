use std::collections::BTreeMap;

use thiserror::Error;

use crate::logic::{Atom, Signature, Sym, Term, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Comparison {
    Less,
    Greater,
    Equal,
    Incomparable,
}

impl Comparison {
    pub fn flip(self) -> Comparison {
        match self {
            Comparison::Less => Comparison::Greater,
            Comparison::Greater => Comparison::Less,
            c => c,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("symbol `{0}` is not in the precedence")]
    UnknownSymbol(Sym),
    #[error("symbol `{0}` appears twice in the precedence")]
    Duplicate(Sym),
    #[error("malformed precedence `{0}`")]
    Malformed(String),
}

/// Total orders on predicate and function symbols, lowest first.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Precedence {
    predicates: BTreeMap<Sym, usize>,
    functions: BTreeMap<Sym, usize>,
}

impl Precedence {
    pub fn new<P, F>(predicates: P, functions: F) -> Result<Precedence, OrderError>
    where
        P: IntoIterator,
        P::Item: Into<Sym>,
        F: IntoIterator,
        F::Item: Into<Sym>,
    {
        Ok(Precedence {
            predicates: ranks(predicates)?,
            functions: ranks(functions)?,
        })
    }

    /// Symbols ranked in order of first appearance in `sig`.
    pub fn from_signature(sig: &Signature) -> Precedence {
        Precedence::new(
            sig.predicates().iter().cloned(),
            sig.functions().iter().cloned(),
        )
        .expect("signature symbols are unique per kind")
    }

    /// Parses a chain such as `Q<P` or `a<f<Q<P`, sorting names into
    /// predicates and functions by looking them up in `sig`. Symbols of `sig`
    /// missing from the chain are reported as unknown.
    pub fn parse_chain(chain: &str, sig: &Signature) -> Result<Precedence, OrderError> {
        let names: Vec<&str> = chain.split('<').map(str::trim).collect();
        if names.iter().any(|n| n.is_empty()) {
            return Err(OrderError::Malformed(chain.to_string()));
        }
        let mut preds = Vec::new();
        let mut funs = Vec::new();
        for n in &names {
            let is_pred = sig.predicates().iter().any(|p| &**p == *n);
            let is_fun = sig.functions().iter().any(|f| &**f == *n);
            if !is_pred && !is_fun {
                return Err(OrderError::UnknownSymbol((*n).into()));
            }
            if is_pred {
                preds.push(*n);
            }
            if is_fun {
                funs.push(*n);
            }
        }
        let prec = Precedence::new(preds, funs)?;
        prec.covers(sig)?;
        Ok(prec)
    }

    /// Checks that every symbol of `sig` has a rank.
    pub fn covers(&self, sig: &Signature) -> Result<(), OrderError> {
        for p in sig.predicates() {
            self.pred_rank(p)?;
        }
        for f in sig.functions() {
            self.fun_rank(f)?;
        }
        Ok(())
    }

    fn pred_rank(&self, p: &Sym) -> Result<usize, OrderError> {
        self.predicates
            .get(p)
            .copied()
            .ok_or_else(|| OrderError::UnknownSymbol(p.clone()))
    }

    fn fun_rank(&self, f: &Sym) -> Result<usize, OrderError> {
        self.functions
            .get(f)
            .copied()
            .ok_or_else(|| OrderError::UnknownSymbol(f.clone()))
    }

    fn check_term(&self, t: &Term) -> Result<(), OrderError> {
        if let Term::App(f, args) = t {
            self.fun_rank(f)?;
            args.iter().try_for_each(|a| self.check_term(a))?;
        }
        Ok(())
    }

    fn check_atom(&self, a: &Atom) -> Result<(), OrderError> {
        self.pred_rank(&a.pred)?;
        a.args.iter().try_for_each(|t| self.check_term(t))
    }
}

fn ranks<I>(names: I) -> Result<BTreeMap<Sym, usize>, OrderError>
where
    I: IntoIterator,
    I::Item: Into<Sym>,
{
    let mut out = BTreeMap::new();
    for (i, n) in names.into_iter().enumerate() {
        let n: Sym = n.into();
        if out.insert(n.clone(), i).is_some() {
            return Err(OrderError::Duplicate(n));
        }
    }
    Ok(out)
}

// Knuth-Bendix style comparison with every symbol and variable weighing 1.
// `s > t` needs every variable to occur in `s` at least as often as in `t`,
// which is what makes the order stable under substitution.

fn var_counts_atom(a: &Atom) -> BTreeMap<Var, usize> {
    let mut m = BTreeMap::new();
    a.args.iter().for_each(|t| t.count_vars(&mut m));
    m
}

fn var_counts_term(t: &Term) -> BTreeMap<Var, usize> {
    let mut m = BTreeMap::new();
    t.count_vars(&mut m);
    m
}

fn dominates(big: &BTreeMap<Var, usize>, small: &BTreeMap<Var, usize>) -> bool {
    small
        .iter()
        .all(|(v, n)| big.get(v).copied().unwrap_or(0) >= *n)
}

fn decide(
    weight_s: usize,
    weight_t: usize,
    vs: &BTreeMap<Var, usize>,
    vt: &BTreeMap<Var, usize>,
    tie: impl FnOnce() -> Result<Comparison, OrderError>,
) -> Result<Comparison, OrderError> {
    let s_ge = dominates(vs, vt);
    let t_ge = dominates(vt, vs);
    let raw = match weight_s.cmp(&weight_t) {
        std::cmp::Ordering::Greater => Comparison::Greater,
        std::cmp::Ordering::Less => Comparison::Less,
        std::cmp::Ordering::Equal => tie()?,
    };
    Ok(match raw {
        Comparison::Greater if s_ge => Comparison::Greater,
        Comparison::Less if t_ge => Comparison::Less,
        Comparison::Equal => Comparison::Equal,
        _ => Comparison::Incomparable,
    })
}

fn compare_terms(p: &Precedence, s: &Term, t: &Term) -> Result<Comparison, OrderError> {
    if s == t {
        return Ok(Comparison::Equal);
    }
    match (s, t) {
        (Term::Var(x), _) => Ok(if t.occurs(*x) {
            Comparison::Less
        } else {
            Comparison::Incomparable
        }),
        (_, Term::Var(y)) => Ok(if s.occurs(*y) {
            Comparison::Greater
        } else {
            Comparison::Incomparable
        }),
        (Term::App(f, xs), Term::App(g, ys)) => {
            let (vs, vt) = (var_counts_term(s), var_counts_term(t));
            decide(s.size(), t.size(), &vs, &vt, || {
                if f != g {
                    let (rf, rg) = (p.fun_rank(f)?, p.fun_rank(g)?);
                    return Ok(if rf < rg {
                        Comparison::Less
                    } else {
                        Comparison::Greater
                    });
                }
                lexicographic(p, xs, ys)
            })
        }
    }
}

fn lexicographic(p: &Precedence, xs: &[Term], ys: &[Term]) -> Result<Comparison, OrderError> {
    for (x, y) in xs.iter().zip(ys) {
        match compare_terms(p, x, y)? {
            Comparison::Equal => continue,
            c => return Ok(c),
        }
    }
    // same symbol, same arity, all arguments equal
    Ok(Comparison::Equal)
}

/// Compares two atoms: total weight first, then predicate precedence, then
/// arguments left to right. Stable under substitution and total on ground
/// atoms. `Equal` only for identical atoms.
pub fn compare_atoms(p: &Precedence, a: &Atom, b: &Atom) -> Result<Comparison, OrderError> {
    p.check_atom(a)?;
    p.check_atom(b)?;
    if a == b {
        return Ok(Comparison::Equal);
    }
    let (va, vb) = (var_counts_atom(a), var_counts_atom(b));
    decide(a.size(), b.size(), &va, &vb, || {
        if a.pred != b.pred {
            let (ra, rb) = (p.pred_rank(&a.pred)?, p.pred_rank(&b.pred)?);
            return Ok(if ra < rb {
                Comparison::Less
            } else {
                Comparison::Greater
            });
        }
        lexicographic(p, &a.args, &b.args)
    })
}

/// No other literal's atom is greater than the one at `pos`. Incomparable counts as not greater.
pub fn is_maximal(
    pos: usize,
    literals: &[crate::logic::Literal],
    p: &Precedence,
) -> Result<bool, OrderError> {
    let atom = &literals[pos].atom;
    for (i, l) in literals.iter().enumerate() {
        if i != pos && compare_atoms(p, &l.atom, atom)? == Comparison::Greater {
            return Ok(false);
        }
    }
    Ok(true)
}

/// No other literal's atom is greater than or equal to the one at `pos`.
pub fn is_strictly_maximal(
    pos: usize,
    literals: &[crate::logic::Literal],
    p: &Precedence,
) -> Result<bool, OrderError> {
    let atom = &literals[pos].atom;
    for (i, l) in literals.iter().enumerate() {
        if i != pos
            && matches!(
                compare_atoms(p, &l.atom, atom)?,
                Comparison::Greater | Comparison::Equal
            )
        {
            return Ok(false);
        }
    }
    Ok(true)
}
