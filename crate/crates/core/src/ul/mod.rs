//! Separability by unambiguous languages: unambiguous products, the `≃κ`
//! equivalence and its finite abstractions.

mod index;
mod separate;

use std::collections::BTreeSet;

use serde::Serialize;

use crate::automata::{Nfa, Transition};
use crate::error::{Error, Result};
use crate::pieces::k_decomposition;
use crate::symbol::Symbol;

pub use index::{enumerate_unambiguous_products, ul_abstraction, ul_eq, ProductIndex, UlAbstraction};
pub use separate::{
    decide_ul_separable, ul_abstraction_set, ul_separable_at, UlDecision, UlOutcome,
};

/// A product `B0* a1 B1* ⋯ ak Bk*`; `k` is its size. Sets may be empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Product {
    pub sets: Vec<BTreeSet<Symbol>>,
    pub letters: Vec<Symbol>,
}

impl Product {
    pub fn new(sets: Vec<BTreeSet<Symbol>>, letters: Vec<Symbol>) -> Result<Self> {
        if sets.len() != letters.len() + 1 {
            return Err(Error::Schema("a product of size k has k + 1 sets".into()));
        }
        Ok(Product { sets, letters })
    }

    pub fn size(&self) -> usize {
        self.letters.len()
    }

    /// Symbols occurring in the product, sorted.
    pub fn symbols(&self) -> Vec<Symbol> {
        let all: BTreeSet<Symbol> = self
            .sets
            .iter()
            .flatten()
            .chain(&self.letters)
            .cloned()
            .collect();
        all.into_iter().collect()
    }

    /// Number of factorizations `w = x0 a1 x1 ⋯ ak xk` with `xi ∈ Bi*`.
    pub fn factorizations(&self, w: &[Symbol]) -> usize {
        let k = self.size();
        let mut runs = vec![0usize; k + 1];
        runs[0] = 1;
        for a in w {
            let mut next = vec![0usize; k + 1];
            for i in 0..=k {
                if self.sets[i].contains(a) {
                    next[i] += runs[i];
                }
                if i < k && self.letters[i] == *a {
                    next[i + 1] += runs[i];
                }
            }
            runs = next;
        }
        runs[k]
    }

    pub fn contains(&self, w: &[Symbol]) -> bool {
        self.factorizations(w) > 0
    }
}

/// A product every word of which has exactly one factorization.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct UnambiguousProduct(Product);

impl UnambiguousProduct {
    pub fn new(p: Product) -> Result<Self> {
        if is_unambiguous_product(&p) {
            Ok(UnambiguousProduct(p))
        } else {
            Err(Error::Schema("product is ambiguous".into()))
        }
    }

    pub fn product(&self) -> &Product {
        &self.0
    }
}

/// States `0..=k`: state `i` loops on `Bi` and moves to `i+1` on
/// `a(i+1)`; `0` is initial and `k` final. Accepting runs correspond to
/// factorizations.
pub fn product_to_nfa(p: &Product) -> Nfa {
    let alphabet = p.symbols();
    let pos = |a: &Symbol| alphabet.binary_search(a).expect("symbol of the product");
    let k = p.size();
    let mut ts = Vec::new();
    for (i, b) in p.sets.iter().enumerate() {
        ts.extend(b.iter().map(|a| Transition { src: i, letter: pos(a), dst: i }));
    }
    for (i, a) in p.letters.iter().enumerate() {
        ts.push(Transition { src: i, letter: pos(a), dst: i + 1 });
    }
    let alphabet = if alphabet.is_empty() {
        vec![Symbol::from("a")]
    } else {
        alphabet
    };
    Nfa::from_parts(alphabet, (0..=k).map(|i| i.to_string()).collect(), [0], [k], ts)
        .expect("product automaton is well formed")
}

/// Self-product criterion: ambiguous iff some pair of distinct states is
/// reachable from `(0,0)` and co-reachable to `(k,k)` in the square of
/// the product automaton.
pub fn is_unambiguous_product(p: &Product) -> bool {
    let alphabet = p.symbols();
    let masks = p
        .sets
        .iter()
        .map(|b| b.iter().fold(0u64, |m, a| m | 1 << alphabet.binary_search(a).unwrap()))
        .collect::<Vec<_>>();
    let letters = p
        .letters
        .iter()
        .map(|a| alphabet.binary_search(a).unwrap())
        .collect::<Vec<_>>();
    index::unambiguous(&masks, &letters, alphabet.len())
}

/// True iff `w` is an `h`-A-pattern but not an `(h+1)`-A-pattern, for `A`
/// the letters of `order`.
pub fn admits_h_decomposition(w: &[Symbol], h: usize, order: &[Symbol]) -> bool {
    w.iter().all(|a| order.contains(a)) && k_decomposition(w, order).power == h
}
