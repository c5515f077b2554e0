//! Atom ordering and literal selection for ordered resolution.

mod kbo;
mod selection;

pub use kbo::{compare_atoms, is_maximal, is_strictly_maximal, Comparison, OrderError, Precedence};
pub use selection::{SelectionError, SelectionFn};
