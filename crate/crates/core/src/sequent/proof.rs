use std::fmt;

use crate::logic::{Term, Var};
use crate::rewrite::{Prop, RewriteTrace};

/// `gamma ⊢ delta`, both multisets.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Sequent {
    pub gamma: Vec<Prop>,
    pub delta: Vec<Prop>,
}

impl Sequent {
    pub fn new(gamma: Vec<Prop>, delta: Vec<Prop>) -> Sequent {
        Sequent { gamma, delta }
    }

    pub fn free_vars(&self) -> Vec<Var> {
        let mut out = Vec::new();
        for p in self.gamma.iter().chain(&self.delta) {
            for v in p.free_vars() {
                if !out.contains(&v) {
                    out.push(v);
                }
            }
        }
        out
    }

    pub fn max_var(&self) -> Option<u32> {
        self.gamma
            .iter()
            .chain(&self.delta)
            .filter_map(Prop::max_var)
            .max()
    }

    /// Multiset equality up to bound variable names.
    pub fn same_as(&self, other: &Sequent) -> bool {
        multiset_alpha_eq(&self.gamma, &other.gamma) && multiset_alpha_eq(&self.delta, &other.delta)
    }

    /// Key equal for sequents that differ only in formula order.
    pub fn canonical_key(&self) -> String {
        let side = |ps: &[Prop]| {
            let mut v: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
            v.sort();
            v.join(" , ")
        };
        format!("{} |- {}", side(&self.gamma), side(&self.delta))
    }
}

fn multiset_alpha_eq(a: &[Prop], b: &[Prop]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    a.iter().all(
        |p| match (0..b.len()).find(|&j| !used[j] && p.alpha_eq(&b[j])) {
            Some(j) => {
                used[j] = true;
                true
            }
            None => false,
        },
    )
}

fn write_side(f: &mut fmt::Formatter<'_>, ps: &[Prop]) -> fmt::Result {
    for (i, p) in ps.iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_side(f, &self.gamma)?;
        if self.gamma.is_empty() {
            f.write_str("|-")?;
        } else {
            f.write_str(" |-")?;
        }
        if !self.delta.is_empty() {
            f.write_str(" ")?;
        }
        write_side(f, &self.delta)
    }
}

/// Side condition `source →±* target`, witnessed by a replayable trace.
/// The source is implied by the proof node that carries the witness.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Witness {
    pub target: Prop,
    pub trace: RewriteTrace,
}

impl Witness {
    pub fn new(target: Prop, trace: RewriteTrace) -> Witness {
        Witness { target, trace }
    }

    /// Zero-step witness.
    pub fn refl(target: Prop) -> Witness {
        Witness {
            target,
            trace: RewriteTrace::empty(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RuleTag {
    Axiom,
    Cut,
    ContrLeft,
    ContrRight,
    WeakLeft,
    WeakRight,
    BotLeft,
    NegLeft,
    NegRight,
    OrLeft,
    OrRight,
    ForallLeft,
    ForallRight,
}

impl RuleTag {
    pub const ALL: [RuleTag; 13] = [
        RuleTag::Axiom,
        RuleTag::Cut,
        RuleTag::ContrLeft,
        RuleTag::ContrRight,
        RuleTag::WeakLeft,
        RuleTag::WeakRight,
        RuleTag::BotLeft,
        RuleTag::NegLeft,
        RuleTag::NegRight,
        RuleTag::OrLeft,
        RuleTag::OrRight,
        RuleTag::ForallLeft,
        RuleTag::ForallRight,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RuleTag::Axiom => "axiom",
            RuleTag::Cut => "cut",
            RuleTag::ContrLeft => "contr-left",
            RuleTag::ContrRight => "contr-right",
            RuleTag::WeakLeft => "weak-left",
            RuleTag::WeakRight => "weak-right",
            RuleTag::BotLeft => "bot-left",
            RuleTag::NegLeft => "neg-left",
            RuleTag::NegRight => "neg-right",
            RuleTag::OrLeft => "or-left",
            RuleTag::OrRight => "or-right",
            RuleTag::ForallLeft => "forall-left",
            RuleTag::ForallRight => "forall-right",
        }
    }

    pub fn from_name(name: &str) -> Option<RuleTag> {
        RuleTag::ALL.into_iter().find(|t| t.name() == name)
    }

    pub fn premises(self) -> usize {
        match self {
            RuleTag::Axiom | RuleTag::BotLeft => 0,
            RuleTag::Cut | RuleTag::OrLeft => 2,
            _ => 1,
        }
    }
}

/// A derivation in the polarized sequent calculus modulo a rewrite system.
///
/// The conclusion of each node is not stored: the checker computes premises
/// from the conclusion. `index` picks the principal formula in `gamma` for
/// left rules and in `delta` for right rules. In every premise the principal
/// formula is removed and the new formulas are appended at the end of their
/// side, in the order listed in the rule.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ProofTree {
    /// `A ⊢ B` with `A →-* P` (`left`) and `B →+* P` (`right`), `P` atomic.
    Axiom { left: Witness, right: Witness },
    /// `A →-* B` (`neg`) and `A →+* C` (`pos`); premises `Γ, B ⊢ Δ` and `Γ ⊢ Δ, C`.
    Cut {
        formula: Prop,
        neg: Witness,
        pos: Witness,
        left: Box<ProofTree>,
        right: Box<ProofTree>,
    },
    /// `A →-* B`, `A →-* C`; premise `Γ, B, C ⊢ Δ`.
    ContrLeft {
        index: usize,
        first: Witness,
        second: Witness,
        premise: Box<ProofTree>,
    },
    /// `A →+* B`, `A →+* C`; premise `Γ ⊢ Δ, B, C`.
    ContrRight {
        index: usize,
        first: Witness,
        second: Witness,
        premise: Box<ProofTree>,
    },
    WeakLeft {
        index: usize,
        premise: Box<ProofTree>,
    },
    WeakRight {
        index: usize,
        premise: Box<ProofTree>,
    },
    /// `A →-* ⊥`.
    BotLeft { index: usize, witness: Witness },
    /// `A →-* ¬B`; premise `Γ ⊢ Δ, B`.
    NegLeft {
        index: usize,
        witness: Witness,
        premise: Box<ProofTree>,
    },
    /// `A →+* ¬B`; premise `Γ, B ⊢ Δ`.
    NegRight {
        index: usize,
        witness: Witness,
        premise: Box<ProofTree>,
    },
    /// `A →-* B ∨ C`; premises `Γ, B ⊢ Δ` and `Γ, C ⊢ Δ`.
    OrLeft {
        index: usize,
        witness: Witness,
        left: Box<ProofTree>,
        right: Box<ProofTree>,
    },
    /// `A →+* B ∨ C`; premise `Γ ⊢ Δ, B, C`.
    OrRight {
        index: usize,
        witness: Witness,
        premise: Box<ProofTree>,
    },
    /// `⟨x, B, t⟩`: `A →-* ∀x B` (`witness`) and `(t/x)B →-* C` (`instance`); premise `Γ, C ⊢ Δ`.
    ForallLeft {
        index: usize,
        witness: Witness,
        var: Var,
        body: Prop,
        term: Term,
        instance: Witness,
        premise: Box<ProofTree>,
    },
    /// `⟨x, B⟩`: `A →+* ∀x B`, `x` not free in `Γ Δ`; premise `Γ ⊢ Δ, B`.
    ForallRight {
        index: usize,
        witness: Witness,
        var: Var,
        body: Prop,
        premise: Box<ProofTree>,
    },
}

impl ProofTree {
    pub fn tag(&self) -> RuleTag {
        match self {
            ProofTree::Axiom { .. } => RuleTag::Axiom,
            ProofTree::Cut { .. } => RuleTag::Cut,
            ProofTree::ContrLeft { .. } => RuleTag::ContrLeft,
            ProofTree::ContrRight { .. } => RuleTag::ContrRight,
            ProofTree::WeakLeft { .. } => RuleTag::WeakLeft,
            ProofTree::WeakRight { .. } => RuleTag::WeakRight,
            ProofTree::BotLeft { .. } => RuleTag::BotLeft,
            ProofTree::NegLeft { .. } => RuleTag::NegLeft,
            ProofTree::NegRight { .. } => RuleTag::NegRight,
            ProofTree::OrLeft { .. } => RuleTag::OrLeft,
            ProofTree::OrRight { .. } => RuleTag::OrRight,
            ProofTree::ForallLeft { .. } => RuleTag::ForallLeft,
            ProofTree::ForallRight { .. } => RuleTag::ForallRight,
        }
    }

    pub fn children(&self) -> Vec<&ProofTree> {
        match self {
            ProofTree::Axiom { .. } | ProofTree::BotLeft { .. } => Vec::new(),
            ProofTree::Cut { left, right, .. } | ProofTree::OrLeft { left, right, .. } => {
                vec![left, right]
            }
            ProofTree::ContrLeft { premise, .. }
            | ProofTree::ContrRight { premise, .. }
            | ProofTree::WeakLeft { premise, .. }
            | ProofTree::WeakRight { premise, .. }
            | ProofTree::NegLeft { premise, .. }
            | ProofTree::NegRight { premise, .. }
            | ProofTree::OrRight { premise, .. }
            | ProofTree::ForallLeft { premise, .. }
            | ProofTree::ForallRight { premise, .. } => vec![premise],
        }
    }

    /// Mutable access to every witness of this node, in the order they appear.
    pub fn witnesses_mut(&mut self) -> Vec<&mut Witness> {
        match self {
            ProofTree::Axiom { left, right } => vec![left, right],
            ProofTree::Cut { neg, pos, .. } => vec![neg, pos],
            ProofTree::ContrLeft { first, second, .. }
            | ProofTree::ContrRight { first, second, .. } => {
                vec![first, second]
            }
            ProofTree::WeakLeft { .. } | ProofTree::WeakRight { .. } => Vec::new(),
            ProofTree::BotLeft { witness, .. }
            | ProofTree::NegLeft { witness, .. }
            | ProofTree::NegRight { witness, .. }
            | ProofTree::OrLeft { witness, .. }
            | ProofTree::OrRight { witness, .. }
            | ProofTree::ForallRight { witness, .. } => vec![witness],
            ProofTree::ForallLeft {
                witness, instance, ..
            } => vec![witness, instance],
        }
    }

    pub fn children_mut(&mut self) -> Vec<&mut ProofTree> {
        match self {
            ProofTree::Axiom { .. } | ProofTree::BotLeft { .. } => Vec::new(),
            ProofTree::Cut { left, right, .. } | ProofTree::OrLeft { left, right, .. } => {
                vec![left, right]
            }
            ProofTree::ContrLeft { premise, .. }
            | ProofTree::ContrRight { premise, .. }
            | ProofTree::WeakLeft { premise, .. }
            | ProofTree::WeakRight { premise, .. }
            | ProofTree::NegLeft { premise, .. }
            | ProofTree::NegRight { premise, .. }
            | ProofTree::OrRight { premise, .. }
            | ProofTree::ForallLeft { premise, .. }
            | ProofTree::ForallRight { premise, .. } => vec![premise],
        }
    }

    pub fn size(&self) -> usize {
        1 + self.children().iter().map(|c| c.size()).sum::<usize>()
    }

    pub fn height(&self) -> usize {
        1 + self
            .children()
            .iter()
            .map(|c| c.height())
            .max()
            .unwrap_or(0)
    }
}

/// True iff some node of the proof is a cut.
pub fn has_cut(proof: &ProofTree) -> bool {
    proof.tag() == RuleTag::Cut || proof.children().into_iter().any(has_cut)
}
