//! Scattered subwords ("pieces"), the `~κ` congruence, κ-abstractions of
//! regular languages and pattern combinatorics.

mod abstraction;
mod pattern;
pub(crate) mod space;

use std::collections::BTreeSet;

use serde::{Serialize, Serializer};

use crate::symbol::Symbol;

pub use abstraction::{
    abstraction_set, min_kappa, pt_separable_at, separator, separator_dfa, AbstractionSet,
    Separator, DEFAULT_BUDGET,
};
pub use pattern::{k_decomposition, pattern_power, KDecomposition, PatternQuery};

/// The nonempty pieces of size at most `kappa` of some word. The set is
/// closed under taking pieces; the empty piece is implicit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PieceSet<L = Symbol> {
    kappa: usize,
    pieces: BTreeSet<Vec<L>>,
}

impl<L: Ord + Clone> PieceSet<L> {
    /// The piece set of the empty word.
    pub fn empty(kappa: usize) -> Self {
        PieceSet {
            kappa,
            pieces: BTreeSet::new(),
        }
    }

    pub(crate) fn from_pieces(kappa: usize, pieces: BTreeSet<Vec<L>>) -> Self {
        PieceSet { kappa, pieces }
    }

    pub fn kappa(&self) -> usize {
        self.kappa
    }

    pub fn pieces(&self) -> &BTreeSet<Vec<L>> {
        &self.pieces
    }

    pub fn len(&self) -> usize {
        self.pieces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn contains(&self, piece: &[L]) -> bool {
        piece.is_empty() || self.pieces.contains(piece)
    }

    /// Piece set of `w·a` given this piece set of `w`:
    /// `pieces(wa) = pieces(w) ∪ {ua : u ∈ pieces(w) ∪ {ε}, |u| < κ}`.
    pub fn extend(&self, a: &L) -> Self {
        let mut out = self.pieces.clone();
        if self.kappa > 0 {
            out.insert(vec![a.clone()]);
            for u in &self.pieces {
                if u.len() < self.kappa {
                    let mut ua = u.clone();
                    ua.push(a.clone());
                    out.insert(ua);
                }
            }
        }
        PieceSet {
            kappa: self.kappa,
            pieces: out,
        }
    }
}

impl<L: Serialize> Serialize for PieceSet<L> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.pieces.serialize(serializer)
    }
}

/// True iff `u` is a scattered subword of `v`.
pub fn is_piece<L: PartialEq>(u: &[L], v: &[L]) -> bool {
    let mut rest = u.iter().peekable();
    for x in v {
        if rest.peek() == Some(&x) {
            rest.next();
        }
    }
    rest.peek().is_none()
}

/// All nonempty pieces of `w` of size at most `kappa`.
pub fn pieces_up_to<L: Ord + Clone>(w: &[L], kappa: usize) -> PieceSet<L> {
    w.iter()
        .fold(PieceSet::empty(kappa), |acc, a| acc.extend(a))
}

/// `w1 ~κ w2`: same pieces of size at most `kappa`.
pub fn kpeq<L: Ord + Clone>(w1: &[L], w2: &[L], kappa: usize) -> bool {
    pieces_up_to(w1, kappa) == pieces_up_to(w2, kappa)
}
