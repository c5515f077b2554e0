//! The polarized sequent calculus modulo a rewrite system: proof objects,
//! a replay-based checker, bounded cut-free search and a textual proof format.

mod check;
mod file;
mod proof;
mod search;

pub use check::{check_proof, CheckError};
pub use file::{parse_proof_file, print_proof_file, ProofFile};
pub use proof::{has_cut, ProofTree, RuleTag, Sequent, Witness};
pub use search::{cutfree_search, SearchConfig};
