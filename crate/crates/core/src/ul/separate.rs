use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use num_bigint::BigUint;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::automata::{align, Letter, Nfa, StateId};
use crate::error::{Error, Result};
use crate::monoid::{syntactic_monoid, ul_kappa_bound};
use crate::ul::{ProductIndex, UlAbstraction};

/// Interns product-state vectors and memoizes their successors.
struct Explorer<'a> {
    index: &'a ProductIndex,
    /// NFA letter to index position.
    letter_pos: Vec<usize>,
    ids: HashMap<Vec<u64>, u32>,
    states: Vec<Vec<u64>>,
    ext: HashMap<(u32, Letter), u32>,
}

impl<'a> Explorer<'a> {
    fn new(index: &'a ProductIndex, nfa: &Nfa) -> Self {
        let letter_pos = nfa
            .alphabet()
            .iter()
            .map(|a| index.position(a).expect("index covers the alphabet"))
            .collect();
        let mut ex = Explorer {
            index,
            letter_pos,
            ids: HashMap::new(),
            states: Vec::new(),
            ext: HashMap::new(),
        };
        ex.intern(index.initial());
        ex
    }

    fn intern(&mut self, s: Vec<u64>) -> u32 {
        if let Some(&id) = self.ids.get(&s) {
            return id;
        }
        let id = self.states.len() as u32;
        self.states.push(s.clone());
        self.ids.insert(s, id);
        id
    }

    fn step(&mut self, id: u32, l: Letter) -> u32 {
        if let Some(&next) = self.ext.get(&(id, l)) {
            return next;
        }
        let s = self.index.step(&self.states[id as usize], self.letter_pos[l]);
        let next = self.intern(s);
        self.ext.insert((id, l), next);
        next
    }

    fn bits(&self, id: u32) -> UlAbstraction {
        self.index.bits(&self.states[id as usize])
    }
}

/// Abstractions of the accepted words, stopping at the first one found in
/// `stop`. Returns `(image, hit)`.
fn explore(
    nfa: &Nfa,
    ex: &mut Explorer,
    budget: usize,
    stop: Option<&BTreeSet<UlAbstraction>>,
) -> Result<(BTreeSet<UlAbstraction>, bool)> {
    let mut seen: HashSet<(StateId, u32)> = HashSet::new();
    let mut queue = VecDeque::new();
    for &q in nfa.initial() {
        if seen.insert((q, 0)) {
            queue.push_back((q, 0));
        }
    }
    let mut image = BTreeSet::new();
    let mut finals_seen = HashSet::new();
    while let Some((q, id)) = queue.pop_front() {
        if nfa.is_accepting(q) && finals_seen.insert(id) {
            let bits = ex.bits(id);
            if stop.is_some_and(|s| s.contains(&bits)) {
                return Ok((image, true));
            }
            image.insert(bits);
        }
        for &(l, r) in nfa.successors(q) {
            let next = ex.step(id, l);
            if seen.insert((r, next)) {
                if budget > 0 && seen.len() > budget {
                    return Err(Error::BudgetExceeded(seen.len()));
                }
                queue.push_back((r, next));
            }
        }
    }
    Ok((image, false))
}

/// `{ abstraction(w) : w ∈ L(a) }` over the alphabet of `a`.
pub fn ul_abstraction_set(a: &Nfa, kappa: usize, budget: usize) -> Result<BTreeSet<UlAbstraction>> {
    let index = ProductIndex::new(a.alphabet(), kappa, budget)?;
    let mut ex = Explorer::new(&index, a);
    Ok(explore(a, &mut ex, budget, None)?.0)
}

/// True iff no word of `L1` is `≃κ`-equivalent to a word of `L2`.
pub fn ul_separable_at(a1: &Nfa, a2: &Nfa, kappa: usize, budget: usize) -> Result<bool> {
    let (b1, b2) = align(a1, a2);
    let index = ProductIndex::new(b1.alphabet(), kappa, budget)?;
    let mut ex = Explorer::new(&index, &b1);
    let (image, _) = explore(&b1, &mut ex, budget, None)?;
    if image.is_empty() {
        return Ok(true);
    }
    let (_, hit) = explore(&b2, &mut ex, budget, Some(&image))?;
    Ok(!hit)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UlOutcome {
    /// Least level at which the languages separate.
    SeparableAt(usize),
    /// Not separable at any level up to this one.
    NotSeparableUpTo(usize),
    /// Not separable up to a level reaching the bound, hence not
    /// separable by any unambiguous language.
    DefinitiveNotSeparable(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UlDecision {
    pub outcome: UlOutcome,
    pub kappa_bound: BigUint,
    pub monoid_sizes: (usize, usize),
}

impl Serialize for UlDecision {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let (verdict, kappa) = match self.outcome {
            UlOutcome::SeparableAt(k) => ("separable_at", k),
            UlOutcome::NotSeparableUpTo(k) => ("not_separable_up_to", k),
            UlOutcome::DefinitiveNotSeparable(k) => ("definitive_not_separable", k),
        };
        let mut s = serializer.serialize_struct("UlDecision", 4)?;
        s.serialize_field("verdict", verdict)?;
        s.serialize_field("kappa", &kappa)?;
        s.serialize_field("kappa_bound", &self.kappa_bound.to_string())?;
        s.serialize_field("monoid_sizes", &[self.monoid_sizes.0, self.monoid_sizes.1])?;
        s.end()
    }
}

/// Scans `κ = 0..=kappa_max`. A negative answer is definitive when
/// `kappa_max` reaches `(2|M1||M2|+1)(|A|+1)²` for the syntactic monoids
/// of the inputs over their joint alphabet.
pub fn decide_ul_separable(a1: &Nfa, a2: &Nfa, kappa_max: usize, budget: usize) -> Result<UlDecision> {
    let (b1, b2) = align(a1, a2);
    let m1 = syntactic_monoid(&b1)?.size();
    let m2 = syntactic_monoid(&b2)?.size();
    let kappa_bound = ul_kappa_bound(m1, m2, b1.alphabet().len());
    let mut outcome = if BigUint::from(kappa_max) >= kappa_bound {
        UlOutcome::DefinitiveNotSeparable(kappa_max)
    } else {
        UlOutcome::NotSeparableUpTo(kappa_max)
    };
    for kappa in 0..=kappa_max {
        if ul_separable_at(&b1, &b2, kappa, budget)? {
            outcome = UlOutcome::SeparableAt(kappa);
            break;
        }
    }
    Ok(UlDecision {
        outcome,
        kappa_bound,
        monoid_sizes: (m1, m2),
    })
}
