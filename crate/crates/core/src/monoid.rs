//! Transition monoids of complete DFAs.

use std::collections::HashMap;

use num_bigint::BigUint;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::automata::{determinize, Dfa, Nfa, StateId};
use crate::error::{Error, Result};
use crate::symbol::Symbol;

/// Cap on the number of monoid elements.
pub const MAX_ELEMENTS: usize = 100_000;

type Transformation = Vec<u32>;

/// The monoid of state transformations induced by words, with the
/// morphism sending each letter to its transformation. Element 0 is the
/// identity. `x·y` applies `x` first.
#[derive(Clone, Debug)]
pub struct FiniteMonoid {
    alphabet: Vec<Symbol>,
    elements: Vec<Transformation>,
    index: HashMap<Transformation, usize>,
    letter_image: Vec<usize>,
    accepting: Vec<bool>,
}

impl FiniteMonoid {
    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn alphabet(&self) -> &[Symbol] {
        &self.alphabet
    }

    /// The state transformation of an element.
    pub fn element(&self, x: usize) -> &[u32] {
        &self.elements[x]
    }

    pub fn letter_image(&self, a: &Symbol) -> Option<usize> {
        let l = self.alphabet.iter().position(|s| s == a)?;
        Some(self.letter_image[l])
    }

    pub fn is_accepting(&self, x: usize) -> bool {
        self.accepting[x]
    }

    pub fn accepting(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.size()).filter(|&x| self.accepting[x])
    }

    pub fn mult(&self, x: usize, y: usize) -> usize {
        let (fx, fy) = (&self.elements[x], &self.elements[y]);
        let composed: Transformation = fx.iter().map(|&q| fy[q as usize]).collect();
        self.index[&composed]
    }

    /// The full multiplication table, row `x`, column `y` holding `x·y`.
    pub fn table(&self) -> Vec<Vec<usize>> {
        (0..self.size())
            .map(|x| (0..self.size()).map(|y| self.mult(x, y)).collect())
            .collect()
    }
}

impl Serialize for FiniteMonoid {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let letters: std::collections::BTreeMap<&str, usize> = self
            .alphabet
            .iter()
            .zip(&self.letter_image)
            .map(|(s, &x)| (s.as_str(), x))
            .collect();
        let mut s = serializer.serialize_struct("FiniteMonoid", 6)?;
        s.serialize_field("size", &self.size())?;
        s.serialize_field("identity", &self.identity())?;
        s.serialize_field("elements", &self.elements)?;
        s.serialize_field("table", &self.table())?;
        s.serialize_field("letter_image", &letters)?;
        s.serialize_field("accepting", &self.accepting().collect::<Vec<_>>())?;
        s.end()
    }
}

/// Closes the letter transformations of a complete DFA under composition,
/// breadth-first by word length.
pub fn transition_monoid(d: &Dfa) -> Result<FiniteMonoid> {
    if !d.is_complete() {
        return Err(Error::IncompleteDfa);
    }
    let n = d.num_states();
    let letters: Vec<Transformation> = (0..d.alphabet().len())
        .map(|l| {
            (0..n)
                .map(|q| d.next(q, l).expect("complete DFA") as u32)
                .collect()
        })
        .collect();
    let identity: Transformation = (0..n as u32).collect();
    let mut elements = vec![identity.clone()];
    let mut index = HashMap::from([(identity, 0)]);
    let mut i = 0;
    while i < elements.len() {
        for f in &letters {
            let next: Transformation = elements[i].iter().map(|&q| f[q as usize]).collect();
            if !index.contains_key(&next) {
                if elements.len() == MAX_ELEMENTS {
                    return Err(Error::MonoidTooLarge(MAX_ELEMENTS));
                }
                index.insert(next.clone(), elements.len());
                elements.push(next);
            }
        }
        i += 1;
    }
    let letter_image = letters.iter().map(|f| index[f]).collect();
    let init = d.initial();
    let accepting = elements
        .iter()
        .map(|f| d.is_accepting(f[init] as StateId))
        .collect();
    Ok(FiniteMonoid {
        alphabet: d.alphabet().to_vec(),
        elements,
        index,
        letter_image,
        accepting,
    })
}

/// Transition monoid of the minimal complete DFA of `nfa`.
pub fn syntactic_monoid(nfa: &Nfa) -> Result<FiniteMonoid> {
    transition_monoid(&determinize(nfa).minimize())
}

/// The image of `w` under the recognizing morphism.
pub fn evaluate(m: &FiniteMonoid, w: &[Symbol]) -> Result<usize> {
    w.iter().try_fold(m.identity(), |x, a| {
        let y = m
            .letter_image(a)
            .ok_or_else(|| Error::UnknownSymbol(a.to_string()))?;
        Ok(m.mult(x, y))
    })
}

/// `(2·|M1|·|M2| + 1)·(|A| + 1)²`.
pub fn ul_kappa_bound(m1_size: usize, m2_size: usize, alphabet_size: usize) -> BigUint {
    let a = BigUint::from(alphabet_size) + 1u32;
    (BigUint::from(m1_size) * m2_size * 2u32 + 1u32) * &a * &a
}
