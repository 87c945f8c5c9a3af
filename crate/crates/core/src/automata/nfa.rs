use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::symbol::{Symbol, Word};

/// Index of a state inside one automaton.
pub type StateId = usize;
/// Index of a symbol inside one automaton's alphabet.
pub type Letter = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Transition {
    pub src: StateId,
    pub letter: Letter,
    pub dst: StateId,
}

/// A nondeterministic finite automaton without ε-transitions.
///
/// States and letters are interned as dense indices; the original names are
/// kept in `states` and `alphabet`. Transitions are stored sorted and
/// deduplicated, so iteration order is deterministic.
#[derive(Clone, Debug)]
pub struct Nfa {
    alphabet: Vec<Symbol>,
    letter_index: HashMap<Symbol, Letter>,
    states: Vec<String>,
    initial: Vec<StateId>,
    accepting: Vec<bool>,
    transitions: Vec<Transition>,
    out: Vec<Vec<(Letter, StateId)>>,
}

impl Nfa {
    /// Builds an automaton from interned parts. Duplicate symbol or state
    /// names and out-of-range indices are schema errors.
    pub fn from_parts(
        alphabet: Vec<Symbol>,
        states: Vec<String>,
        initial: impl IntoIterator<Item = StateId>,
        accepting: impl IntoIterator<Item = StateId>,
        transitions: impl IntoIterator<Item = Transition>,
    ) -> Result<Nfa> {
        let mut letter_index = HashMap::with_capacity(alphabet.len());
        for (i, s) in alphabet.iter().enumerate() {
            if letter_index.insert(s.clone(), i).is_some() {
                return Err(Error::Schema(format!("duplicate symbol `{s}`")));
            }
        }
        let mut seen = HashMap::with_capacity(states.len());
        for (i, s) in states.iter().enumerate() {
            if seen.insert(s.as_str(), i).is_some() {
                return Err(Error::Schema(format!("duplicate state `{s}`")));
            }
        }
        let n = states.len();
        let check = |q: StateId| {
            if q < n {
                Ok(q)
            } else {
                Err(Error::UnknownState(q.to_string()))
            }
        };
        let initial: BTreeSet<StateId> = initial.into_iter().map(check).collect::<Result<_>>()?;
        let mut acc = vec![false; n];
        for q in accepting {
            acc[check(q)?] = true;
        }
        let mut ts: Vec<Transition> = Vec::new();
        for t in transitions {
            check(t.src)?;
            check(t.dst)?;
            if t.letter >= alphabet.len() {
                return Err(Error::UnknownSymbol(t.letter.to_string()));
            }
            ts.push(t);
        }
        ts.sort();
        ts.dedup();
        let mut out = vec![Vec::new(); n];
        for t in &ts {
            out[t.src].push((t.letter, t.dst));
        }
        Ok(Nfa {
            alphabet,
            letter_index,
            states,
            initial: initial.into_iter().collect(),
            accepting: acc,
            transitions: ts,
            out,
        })
    }

    /// Builds an automaton from names, as in the JSON document format.
    pub fn from_names(
        alphabet: &[&str],
        states: &[&str],
        initial: &[&str],
        accepting: &[&str],
        transitions: &[(&str, &str, &str)],
    ) -> Result<Nfa> {
        crate::automata::io::AutomatonDoc {
            alphabet: alphabet.iter().map(|s| s.to_string()).collect(),
            states: states.iter().map(|s| s.to_string()).collect(),
            initial: initial.iter().map(|s| s.to_string()).collect(),
            accepting: accepting.iter().map(|s| s.to_string()).collect(),
            transitions: transitions
                .iter()
                .map(|(a, b, c)| (a.to_string(), b.to_string(), c.to_string()))
                .collect(),
        }
        .into_nfa()
    }

    pub fn alphabet(&self) -> &[Symbol] {
        &self.alphabet
    }

    pub fn letter(&self, s: &Symbol) -> Option<Letter> {
        self.letter_index.get(s).copied()
    }

    pub fn symbol(&self, l: Letter) -> &Symbol {
        &self.alphabet[l]
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    pub fn state_names(&self) -> &[String] {
        &self.states
    }

    pub fn state_name(&self, q: StateId) -> &str {
        &self.states[q]
    }

    pub fn state_id(&self, name: &str) -> Option<StateId> {
        self.states.iter().position(|s| s == name)
    }

    /// Looks up a state by name, failing with `UnknownState`.
    pub fn require_state(&self, name: &str) -> Result<StateId> {
        self.state_id(name)
            .ok_or_else(|| Error::UnknownState(name.to_string()))
    }

    pub fn initial(&self) -> &[StateId] {
        &self.initial
    }

    pub fn is_initial(&self, q: StateId) -> bool {
        self.initial.binary_search(&q).is_ok()
    }

    pub fn is_accepting(&self, q: StateId) -> bool {
        self.accepting[q]
    }

    pub fn accepting(&self) -> impl Iterator<Item = StateId> + '_ {
        (0..self.states.len()).filter(|&q| self.accepting[q])
    }

    pub fn transitions(&self) -> &[Transition] {
        &self.transitions
    }

    /// Outgoing `(letter, target)` pairs of `q`, sorted.
    pub fn successors(&self, q: StateId) -> &[(Letter, StateId)] {
        &self.out[q]
    }

    pub fn has_transition(&self, src: StateId, letter: Letter, dst: StateId) -> bool {
        self.out[src].binary_search(&(letter, dst)).is_ok()
    }

    /// Number of states plus number of transitions.
    pub fn size(&self) -> usize {
        self.states.len() + self.transitions.len()
    }

    /// Re-indexes the automaton over `alphabet`. Transitions on symbols
    /// absent from `alphabet` are dropped; symbols of `alphabet` unknown to
    /// the automaton get no transitions.
    pub fn over_alphabet(&self, alphabet: &[Symbol]) -> Nfa {
        let index: HashMap<&Symbol, Letter> =
            alphabet.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let ts = self.transitions.iter().filter_map(|t| {
            index.get(&self.alphabet[t.letter]).map(|&l| Transition {
                src: t.src,
                letter: l,
                dst: t.dst,
            })
        });
        Nfa::from_parts(
            alphabet.to_vec(),
            self.states.clone(),
            self.initial.iter().copied(),
            self.accepting(),
            ts,
        )
        .expect("re-indexing preserves well-formedness")
    }

    /// Restriction to the subalphabet `b ∩ alphabet`: same states, initial
    /// and final states, only the transitions labelled in `b`.
    pub fn restrict(&self, b: &[Symbol]) -> Nfa {
        let keep: Vec<Symbol> = self
            .alphabet
            .iter()
            .filter(|s| b.contains(s))
            .cloned()
            .collect();
        self.over_alphabet(&keep)
    }

    /// Converts a word into letters of this automaton, or `None` if it uses
    /// a symbol outside the alphabet.
    pub fn letters_of(&self, w: &[Symbol]) -> Option<Vec<Letter>> {
        w.iter().map(|s| self.letter(s)).collect()
    }

    pub fn step(&self, current: &BitSet, letter: Letter) -> BitSet {
        let mut next = BitSet::new(self.num_states());
        for q in current.iter() {
            for &(l, r) in &self.out[q] {
                if l == letter {
                    next.insert(r);
                }
            }
        }
        next
    }

    pub fn initial_set(&self) -> BitSet {
        self.initial.iter().copied().collect()
    }

    pub fn accepts(&self, w: &[Symbol]) -> bool {
        let Some(letters) = self.letters_of(w) else {
            return false;
        };
        let mut cur = self.initial_set();
        for l in letters {
            cur = self.step(&cur, l);
            if cur.is_empty() {
                return false;
            }
        }
        let accepted = cur.iter().any(|q| self.accepting[q]);
        accepted
    }

    /// States reachable from `from` using only letters in `allowed`
    /// (all letters when `allowed` is `None`).
    pub fn reachable_from(&self, from: &[StateId], allowed: Option<&BitSet>) -> BitSet {
        let mut seen = BitSet::new(self.num_states());
        let mut stack: Vec<StateId> = Vec::new();
        for &q in from {
            if seen.insert(q) {
                stack.push(q);
            }
        }
        while let Some(q) = stack.pop() {
            for &(l, r) in &self.out[q] {
                if allowed.is_none_or(|a| a.contains(l)) && seen.insert(r) {
                    stack.push(r);
                }
            }
        }
        seen
    }

    /// States from which `to` is reachable using only letters in `allowed`.
    pub fn coreachable_to(&self, to: &[StateId], allowed: Option<&BitSet>) -> BitSet {
        let mut rev: Vec<Vec<StateId>> = vec![Vec::new(); self.num_states()];
        for t in &self.transitions {
            if allowed.is_none_or(|a| a.contains(t.letter)) {
                rev[t.dst].push(t.src);
            }
        }
        let mut seen = BitSet::new(self.num_states());
        let mut stack: Vec<StateId> = Vec::new();
        for &q in to {
            if seen.insert(q) {
                stack.push(q);
            }
        }
        while let Some(q) = stack.pop() {
            for &p in &rev[q] {
                if seen.insert(p) {
                    stack.push(p);
                }
            }
        }
        seen
    }

    /// True iff no final state is reachable from an initial state.
    pub fn is_empty(&self) -> bool {
        !self
            .reachable_from(&self.initial, None)
            .iter()
            .any(|q| self.accepting[q])
    }

    /// Shortest path from `from` to `to` using letters in `allowed`
    /// (BFS, successors in sorted order). Returns the `(letter, state)`
    /// steps, empty when `from == to`.
    pub fn shortest_path(
        &self,
        from: StateId,
        to: StateId,
        allowed: &BitSet,
        within: Option<&BitSet>,
    ) -> Option<Vec<(Letter, StateId)>> {
        let n = self.num_states();
        let mut parent: Vec<Option<(StateId, Letter)>> = vec![None; n];
        let mut seen = BitSet::new(n);
        seen.insert(from);
        let mut queue = VecDeque::from([from]);
        while let Some(q) = queue.pop_front() {
            if q == to {
                let mut steps = Vec::new();
                let mut cur = to;
                while cur != from {
                    let (p, l) = parent[cur].expect("parent recorded during BFS");
                    steps.push((l, cur));
                    cur = p;
                }
                steps.reverse();
                return Some(steps);
            }
            for &(l, r) in &self.out[q] {
                if allowed.contains(l) && within.is_none_or(|w| w.contains(r)) && seen.insert(r) {
                    parent[r] = Some((q, l));
                    queue.push_back(r);
                }
            }
        }
        None
    }

    /// All accepted words of length at most `max_len`, in shortlex order
    /// (letters compared by their alphabet index).
    pub fn enumerate(&self, max_len: usize) -> Vec<Word> {
        let mut out = Vec::new();
        let live = self.coreachable_to(&self.accepting().collect::<Vec<_>>(), None);
        for len in 0..=max_len {
            let mut prefix = Vec::with_capacity(len);
            self.enumerate_exact(&self.initial_set(), len, &live, &mut prefix, &mut out);
        }
        out
    }

    fn enumerate_exact(
        &self,
        cur: &BitSet,
        remaining: usize,
        live: &BitSet,
        prefix: &mut Vec<Letter>,
        out: &mut Vec<Word>,
    ) {
        if remaining == 0 {
            if cur.iter().any(|q| self.accepting[q]) {
                out.push(prefix.iter().map(|&l| self.alphabet[l].clone()).collect());
            }
            return;
        }
        for l in 0..self.alphabet.len() {
            let mut next = self.step(cur, l);
            next.intersect_with(live);
            if next.is_empty() {
                continue;
            }
            prefix.push(l);
            self.enumerate_exact(&next, remaining - 1, live, prefix, out);
            prefix.pop();
        }
    }
}

/// Union of the alphabets of `a1` and `a2`: the symbols of `a1` in order,
/// followed by the new symbols of `a2`.
pub fn joint_alphabet(a1: &Nfa, a2: &Nfa) -> Vec<Symbol> {
    let mut out = a1.alphabet().to_vec();
    for s in a2.alphabet() {
        if a1.letter(s).is_none() {
            out.push(s.clone());
        }
    }
    out
}

/// Re-indexes both automata over their joint alphabet so that equal letter
/// indices denote equal symbols. State indices are unchanged.
pub fn align(a1: &Nfa, a2: &Nfa) -> (Nfa, Nfa) {
    let alphabet = joint_alphabet(a1, a2);
    (a1.over_alphabet(&alphabet), a2.over_alphabet(&alphabet))
}

/// Synchronous product over the joint alphabet. Only pairs reachable from
/// initial pairs are materialized; state `(p,q)` is named `(p,q)`.
pub fn product(a1: &Nfa, a2: &Nfa) -> Nfa {
    let (b1, b2) = align(a1, a2);
    let mut ids: HashMap<(StateId, StateId), StateId> = HashMap::new();
    let mut pairs: Vec<(StateId, StateId)> = Vec::new();
    let mut intern = |p: (StateId, StateId), pairs: &mut Vec<(StateId, StateId)>| {
        *ids.entry(p).or_insert_with(|| {
            pairs.push(p);
            pairs.len() - 1
        })
    };
    let mut initial = Vec::new();
    for &i1 in b1.initial() {
        for &i2 in b2.initial() {
            initial.push(intern((i1, i2), &mut pairs));
        }
    }
    let mut ts = Vec::new();
    let mut next = 0;
    while next < pairs.len() {
        let (p1, p2) = pairs[next];
        for &(l1, r1) in b1.successors(p1) {
            for &(l2, r2) in b2.successors(p2) {
                if l1 == l2 {
                    let to = intern((r1, r2), &mut pairs);
                    ts.push(Transition {
                        src: next,
                        letter: l1,
                        dst: to,
                    });
                }
            }
        }
        next += 1;
    }
    let names = unique_names(
        pairs
            .iter()
            .map(|&(p, q)| format!("({},{})", b1.state_name(p), b2.state_name(q)))
            .collect(),
    );
    let accepting: Vec<StateId> = pairs
        .iter()
        .enumerate()
        .filter(|(_, &(p, q))| b1.is_accepting(p) && b2.is_accepting(q))
        .map(|(i, _)| i)
        .collect();
    Nfa::from_parts(b1.alphabet().to_vec(), names, initial, accepting, ts)
        .expect("product is well-formed")
}

/// Returns `names` unchanged when they are pairwise distinct, otherwise
/// falls back to positional names `s0, s1, …`.
pub(crate) fn unique_names(names: Vec<String>) -> Vec<String> {
    let distinct: std::collections::HashSet<&String> = names.iter().collect();
    if distinct.len() == names.len() {
        names
    } else {
        (0..names.len()).map(|i| format!("s{i}")).collect()
    }
}
