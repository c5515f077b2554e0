use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use super::term::{Atom, Sym, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SymbolKind {
    Function,
    Predicate,
}

impl fmt::Display for SymbolKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymbolKind::Function => f.write_str("function"),
            SymbolKind::Predicate => f.write_str("predicate"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Symbol {
    pub name: Sym,
    pub arity: usize,
    pub kind: SymbolKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} symbol `{name}` used with arity {found}, declared with arity {declared}")]
pub struct ArityClash {
    pub name: Sym,
    pub kind: SymbolKind,
    pub declared: usize,
    pub found: usize,
}

/// Symbols seen so far, in first-declaration order per kind.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Signature {
    functions: BTreeMap<Sym, usize>,
    predicates: BTreeMap<Sym, usize>,
    function_order: Vec<Sym>,
    predicate_order: Vec<Sym>,
}

impl Signature {
    pub fn new() -> Signature {
        Signature::default()
    }

    pub fn declare(
        &mut self,
        name: &Sym,
        arity: usize,
        kind: SymbolKind,
    ) -> Result<(), ArityClash> {
        let (table, order) = match kind {
            SymbolKind::Function => (&mut self.functions, &mut self.function_order),
            SymbolKind::Predicate => (&mut self.predicates, &mut self.predicate_order),
        };
        match table.get(name) {
            Some(&declared) if declared != arity => Err(ArityClash {
                name: name.clone(),
                kind,
                declared,
                found: arity,
            }),
            Some(_) => Ok(()),
            None => {
                table.insert(name.clone(), arity);
                order.push(name.clone());
                Ok(())
            }
        }
    }

    pub fn add_term(&mut self, t: &Term) -> Result<(), ArityClash> {
        if let Term::App(f, args) = t {
            self.declare(f, args.len(), SymbolKind::Function)?;
            for a in args {
                self.add_term(a)?;
            }
        }
        Ok(())
    }

    pub fn add_atom(&mut self, a: &Atom) -> Result<(), ArityClash> {
        self.declare(&a.pred, a.args.len(), SymbolKind::Predicate)?;
        a.args.iter().try_for_each(|t| self.add_term(t))
    }

    pub fn arity(&self, name: &str, kind: SymbolKind) -> Option<usize> {
        match kind {
            SymbolKind::Function => self.functions.get(name).copied(),
            SymbolKind::Predicate => self.predicates.get(name).copied(),
        }
    }

    pub fn functions(&self) -> &[Sym] {
        &self.function_order
    }

    pub fn predicates(&self) -> &[Sym] {
        &self.predicate_order
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        let preds = self.predicate_order.iter().map(|n| Symbol {
            name: n.clone(),
            arity: self.predicates[n],
            kind: SymbolKind::Predicate,
        });
        let funs = self.function_order.iter().map(|n| Symbol {
            name: n.clone(),
            arity: self.functions[n],
            kind: SymbolKind::Function,
        });
        preds.chain(funs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arity_clash_is_reported() {
        let mut sig = Signature::new();
        sig.add_atom(&Atom::new("P", vec![Term::constant("a")]))
            .unwrap();
        let err = sig.add_atom(&Atom::new("P", vec![])).unwrap_err();
        assert_eq!(err.declared, 1);
        assert_eq!(err.found, 0);
        // same name, different kind is fine
        sig.add_term(&Term::app(
            "P",
            vec![Term::constant("a"), Term::constant("a")],
        ))
        .unwrap();
        assert_eq!(sig.symbols().count(), 3);
    }
}
