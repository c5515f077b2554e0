use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::logic::{Clause, ClauseId, Signature};
use crate::ordering::{OrderError, Precedence, SelectionError, SelectionFn};

/// Restriction on which resolution and factoring inferences are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Policy {
    /// Every binary resolvent and factor.
    Plain,
    /// No inference between two theory clauses; derived clauses are never theory.
    SetOfSupport { theory: BTreeSet<ClauseId> },
    /// Ordered resolution with selection.
    OrderedSelection {
        precedence: Precedence,
        selection: SelectionFn,
    },
    /// Polarized resolution modulo: no inference between two one-way clauses,
    /// and a one-way clause may only be resolved on its selected literal.
    Prm,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SaturationError {
    #[error("theory clause {0} does not exist")]
    UnknownTheoryClause(ClauseId),
    #[error("input clause at position {position} has id {id}; ids must be 1..=n in order")]
    BadInputId { position: usize, id: ClauseId },
    #[error("one-way clause {0} has no valid selected literal")]
    BadSelection(ClauseId),
    #[error("admissible conclusion `{0}` is missing from a saturated set")]
    NotSaturated(String),
    #[error("budget must be positive")]
    ZeroBudget,
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error(transparent)]
    Selection(#[from] SelectionError),
}

impl Policy {
    pub fn name(&self) -> &'static str {
        match self {
            Policy::Plain => "plain",
            Policy::SetOfSupport { .. } => "sos",
            Policy::OrderedSelection { .. } => "ordered",
            Policy::Prm => "prm",
        }
    }

    /// Set of support whose theory is every one-way clause of `clauses`.
    pub fn sos_from_roles(clauses: &[Clause]) -> Policy {
        Policy::SetOfSupport {
            theory: clauses
                .iter()
                .filter(|c| c.is_one_way())
                .map(|c| c.id)
                .collect(),
        }
    }

    /// Theory clauses under set of support, one-way clauses under PRM.
    /// Restricted clauses are never merged with derived ones by variant deletion.
    pub fn is_restricted(&self, c: &Clause) -> bool {
        match self {
            Policy::SetOfSupport { theory } => theory.contains(&c.id),
            Policy::Prm => c.is_one_way(),
            Policy::Plain | Policy::OrderedSelection { .. } => false,
        }
    }

    /// Configuration checks done before any inference.
    pub fn validate(&self, clauses: &[Clause]) -> Result<(), SaturationError> {
        for (i, c) in clauses.iter().enumerate() {
            if c.id != i + 1 {
                return Err(SaturationError::BadInputId {
                    position: i,
                    id: c.id,
                });
            }
        }
        match self {
            Policy::Plain => {}
            Policy::SetOfSupport { theory } => {
                if let Some(&bad) = theory.iter().find(|&&id| id == 0 || id > clauses.len()) {
                    return Err(SaturationError::UnknownTheoryClause(bad));
                }
            }
            Policy::OrderedSelection {
                precedence,
                selection,
            } => {
                let mut sig = Signature::new();
                for c in clauses {
                    for l in &c.literals {
                        // arity clashes are a parser concern; ignore them here
                        let _ = sig.add_atom(&l.atom);
                    }
                }
                precedence.covers(&sig)?;
                for c in clauses {
                    selection.selected_positions(c)?;
                }
            }
            Policy::Prm => {
                for c in clauses {
                    if let Some(s) = c.selected() {
                        if s >= c.len() {
                            return Err(SaturationError::BadSelection(c.id));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for Policy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Policy::SetOfSupport { theory } => {
                let ids: Vec<String> = theory.iter().map(|i| i.to_string()).collect();
                write!(f, "sos theory={{{}}}", ids.join(","))
            }
            Policy::OrderedSelection { selection, .. } => {
                let sel = match selection {
                    SelectionFn::None => "none",
                    SelectionFn::AllNegative => "all-neg",
                    SelectionFn::Explicit(_) => "table",
                };
                write!(f, "ordered selection={sel}")
            }
            p => f.write_str(p.name()),
        }
    }
}
