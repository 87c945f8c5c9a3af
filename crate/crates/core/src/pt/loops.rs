use std::collections::{BTreeSet, HashMap};

use crate::automata::{align, Nfa, SccInfo, StateId};
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::symbol::Symbol;

/// SCC decompositions of one automaton, memoized per allowed letter set.
pub(crate) struct SccCache<'a> {
    nfa: &'a Nfa,
    by_letters: HashMap<BitSet, SccInfo>,
}

impl<'a> SccCache<'a> {
    pub fn new(nfa: &'a Nfa) -> Self {
        SccCache {
            nfa,
            by_letters: HashMap::new(),
        }
    }

    /// Letters of `SCC(q, A↾allowed)`.
    pub fn loop_alphabet(&mut self, q: StateId, allowed: &BitSet) -> BitSet {
        let nfa = self.nfa;
        let info = self
            .by_letters
            .entry(allowed.clone())
            .or_insert_with(|| SccInfo::compute(nfa, Some(allowed)));
        info.alphabet[info.component[q]].clone()
    }
}

/// Greatest fixpoint of `C ↦ alph(SCC(q1, A1↾C)) ∩ alph(SCC(q2, A2↾C))`
/// starting from the full alphabet. Both automata share letter indices.
pub(crate) fn common_loop_letters(
    c1: &mut SccCache,
    q1: StateId,
    c2: &mut SccCache,
    q2: StateId,
    num_letters: usize,
) -> Option<BitSet> {
    let mut current = BitSet::full(num_letters);
    loop {
        let mut next = c1.loop_alphabet(q1, &current);
        next.intersect_with(&c2.loop_alphabet(q2, &current));
        if next == current {
            break;
        }
        current = next;
    }
    (!current.is_empty()).then_some(current)
}

/// The largest nonempty `B` such that both `q1` and `q2` carry a loop
/// whose alphabet is exactly `B`, if any.
pub fn max_common_loop_alphabet(
    a1: &Nfa,
    q1: StateId,
    a2: &Nfa,
    q2: StateId,
) -> Result<Option<BTreeSet<Symbol>>> {
    if q1 >= a1.num_states() {
        return Err(Error::UnknownState(q1.to_string()));
    }
    if q2 >= a2.num_states() {
        return Err(Error::UnknownState(q2.to_string()));
    }
    let (b1, b2) = align(a1, a2);
    let n = b1.alphabet().len();
    let found = common_loop_letters(&mut SccCache::new(&b1), q1, &mut SccCache::new(&b2), q2, n);
    Ok(found.map(|c| c.iter().map(|l| b1.symbol(l).clone()).collect()))
}

/// A pair of states sharing a maximal common loop alphabet `letters`, with
/// the states that reach them (`back`) and that they reach (`fwd`) using
/// only those letters.
#[derive(Clone, Debug)]
pub(crate) struct LoopNode {
    pub q1: StateId,
    pub q2: StateId,
    pub letters: BitSet,
    pub back1: BitSet,
    pub fwd1: BitSet,
    pub back2: BitSet,
    pub fwd2: BitSet,
}

impl LoopNode {
    /// True iff this node realizes the summary move `(p1,p2) → (r1,r2)`.
    pub fn realizes(&self, p1: StateId, r1: StateId, p2: StateId, r2: StateId) -> bool {
        self.back1.contains(p1)
            && self.fwd1.contains(r1)
            && self.back2.contains(p2)
            && self.fwd2.contains(r2)
    }
}

/// All loop nodes of two aligned automata, ordered by `(q1, q2)`.
pub(crate) fn loop_nodes(b1: &Nfa, b2: &Nfa) -> Vec<LoopNode> {
    let n = b1.alphabet().len();
    let mut c1 = SccCache::new(b1);
    let mut c2 = SccCache::new(b2);
    let mut out = Vec::new();
    for q1 in 0..b1.num_states() {
        if c1.loop_alphabet(q1, &BitSet::full(n)).is_empty() {
            continue;
        }
        for q2 in 0..b2.num_states() {
            let Some(letters) = common_loop_letters(&mut c1, q1, &mut c2, q2, n) else {
                continue;
            };
            out.push(LoopNode {
                q1,
                q2,
                back1: b1.coreachable_to(&[q1], Some(&letters)),
                fwd1: b1.reachable_from(&[q1], Some(&letters)),
                back2: b2.coreachable_to(&[q2], Some(&letters)),
                fwd2: b2.reachable_from(&[q2], Some(&letters)),
                letters,
            });
        }
    }
    out
}
