use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::logic::{Clause, ClauseId};

/// Which negative literals of a clause are selected.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum SelectionFn {
    #[default]
    None,
    AllNegative,
    /// Clause id to selected positions. Clauses not in the table select nothing.
    Explicit(BTreeMap<ClauseId, BTreeSet<usize>>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SelectionError {
    #[error("clause {clause}: position {position} does not hold a negative literal")]
    NotNegative { clause: ClauseId, position: usize },
    #[error("selection table line {line}: {reason}")]
    Table { line: usize, reason: String },
}

impl SelectionFn {
    pub fn selected_positions(&self, c: &Clause) -> Result<BTreeSet<usize>, SelectionError> {
        match self {
            SelectionFn::None => Ok(BTreeSet::new()),
            SelectionFn::AllNegative => Ok(c
                .literals
                .iter()
                .enumerate()
                .filter(|(_, l)| !l.positive)
                .map(|(i, _)| i)
                .collect()),
            SelectionFn::Explicit(table) => {
                let Some(set) = table.get(&c.id) else {
                    return Ok(BTreeSet::new());
                };
                for &position in set {
                    if c.literals.get(position).is_none_or(|l| l.positive) {
                        return Err(SelectionError::NotNegative {
                            clause: c.id,
                            position,
                        });
                    }
                }
                Ok(set.clone())
            }
        }
    }

    /// Parses a selection table: one `<clause-id> <position>...` entry per
    /// line, `#` starting a comment.
    pub fn parse_table(text: &str) -> Result<SelectionFn, SelectionError> {
        let mut table: BTreeMap<ClauseId, BTreeSet<usize>> = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |reason: &str| SelectionError::Table {
                line: lineno + 1,
                reason: reason.to_string(),
            };
            let mut fields = line
                .split(|c: char| c.is_whitespace() || c == ',' || c == ':')
                .filter(|f| !f.is_empty());
            let id: ClauseId = fields
                .next()
                .and_then(|f| f.parse().ok())
                .ok_or_else(|| bad("expected a clause id"))?;
            let entry = table.entry(id).or_default();
            for f in fields {
                entry.insert(f.parse().map_err(|_| bad("expected a literal position"))?);
            }
        }
        Ok(SelectionFn::Explicit(table))
    }
}
