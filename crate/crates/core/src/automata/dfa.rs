use std::collections::{HashMap, VecDeque};

use crate::automata::nfa::{unique_names, Letter, Nfa, StateId, Transition};
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::symbol::Symbol;

/// A deterministic automaton: one initial state, at most one transition per
/// `(state, letter)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Vec<Symbol>,
    states: Vec<String>,
    initial: StateId,
    accepting: Vec<bool>,
    delta: Vec<Vec<Option<StateId>>>,
}

impl Dfa {
    pub fn new(
        alphabet: Vec<Symbol>,
        states: Vec<String>,
        initial: StateId,
        accepting: Vec<bool>,
        delta: Vec<Vec<Option<StateId>>>,
    ) -> Result<Dfa> {
        let n = states.len();
        if initial >= n {
            return Err(Error::UnknownState(initial.to_string()));
        }
        if accepting.len() != n || delta.len() != n {
            return Err(Error::Schema("table sizes do not match the state count".into()));
        }
        for row in &delta {
            if row.len() != alphabet.len() {
                return Err(Error::Schema("transition row does not cover the alphabet".into()));
            }
            if let Some(&Some(q)) = row.iter().find(|t| t.is_some_and(|q| q >= n)) {
                return Err(Error::UnknownState(q.to_string()));
            }
        }
        Ok(Dfa {
            alphabet,
            states,
            initial,
            accepting,
            delta,
        })
    }

    /// Interprets a structurally deterministic NFA as a DFA.
    pub fn from_nfa(nfa: &Nfa) -> Option<Dfa> {
        if nfa.initial().len() != 1 {
            return None;
        }
        let mut delta = vec![vec![None; nfa.alphabet().len()]; nfa.num_states()];
        for t in nfa.transitions() {
            if delta[t.src][t.letter].replace(t.dst).is_some() {
                return None;
            }
        }
        Some(Dfa {
            alphabet: nfa.alphabet().to_vec(),
            states: nfa.state_names().to_vec(),
            initial: nfa.initial()[0],
            accepting: (0..nfa.num_states()).map(|q| nfa.is_accepting(q)).collect(),
            delta,
        })
    }

    pub fn alphabet(&self) -> &[Symbol] {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    pub fn state_names(&self) -> &[String] {
        &self.states
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn is_accepting(&self, q: StateId) -> bool {
        self.accepting[q]
    }

    pub fn next(&self, q: StateId, l: Letter) -> Option<StateId> {
        self.delta[q][l]
    }

    pub fn letter(&self, s: &Symbol) -> Option<Letter> {
        self.alphabet.iter().position(|a| a == s)
    }

    /// Exactly one transition per `(state, letter)`.
    pub fn is_complete(&self) -> bool {
        self.delta.iter().all(|row| row.iter().all(Option::is_some))
    }

    pub fn accepts(&self, w: &[Symbol]) -> bool {
        let mut q = self.initial;
        for s in w {
            let Some(l) = self.letter(s) else {
                return false;
            };
            match self.delta[q][l] {
                Some(r) => q = r,
                None => return false,
            }
        }
        self.accepting[q]
    }

    /// Adds a rejecting sink if some transition is missing.
    pub fn complete(&self) -> Dfa {
        if self.is_complete() {
            return self.clone();
        }
        let sink = self.states.len();
        let mut out = self.clone();
        out.states.push("sink".to_string());
        out.states = unique_names(out.states);
        out.accepting.push(false);
        out.delta.push(vec![Some(sink); self.alphabet.len()]);
        for row in &mut out.delta {
            for t in row.iter_mut() {
                t.get_or_insert(sink);
            }
        }
        out
    }

    /// Language complement over the same alphabet.
    pub fn complement(&self) -> Dfa {
        let mut out = self.complete();
        for a in &mut out.accepting {
            *a = !*a;
        }
        out
    }

    pub fn to_nfa(&self) -> Nfa {
        let ts = self.delta.iter().enumerate().flat_map(|(q, row)| {
            row.iter().enumerate().filter_map(move |(l, t)| {
                t.map(|r| Transition {
                    src: q,
                    letter: l,
                    dst: r,
                })
            })
        });
        Nfa::from_parts(
            self.alphabet.clone(),
            self.states.clone(),
            [self.initial],
            (0..self.states.len()).filter(|&q| self.accepting[q]),
            ts,
        )
        .expect("DFA tables are well-formed")
    }

    /// The unique minimal complete DFA for the same language. States are
    /// numbered in BFS order from the initial state (letters in alphabet
    /// order), so equal languages give identical automata.
    pub fn minimize(&self) -> Dfa {
        let d = self.complete();
        let m = d.alphabet.len();
        // reachable states in BFS order
        let mut order = vec![d.initial];
        let mut seen = vec![false; d.num_states()];
        seen[d.initial] = true;
        let mut i = 0;
        while i < order.len() {
            let q = order[i];
            for l in 0..m {
                let r = d.delta[q][l].expect("complete");
                if !seen[r] {
                    seen[r] = true;
                    order.push(r);
                }
            }
            i += 1;
        }
        // Moore refinement
        let mut class: Vec<usize> = vec![0; d.num_states()];
        for &q in &order {
            class[q] = usize::from(d.accepting[q]);
        }
        let mut num_classes = 0;
        loop {
            let mut sig_ids: HashMap<Vec<usize>, usize> = HashMap::new();
            let mut next = vec![0; d.num_states()];
            for &q in &order {
                let mut sig = Vec::with_capacity(m + 1);
                sig.push(class[q]);
                sig.extend((0..m).map(|l| class[d.delta[q][l].expect("complete")]));
                let n = sig_ids.len();
                next[q] = *sig_ids.entry(sig).or_insert(n);
            }
            let n = sig_ids.len();
            class = next;
            if n == num_classes {
                break;
            }
            num_classes = n;
        }
        // renumber classes by BFS order of first representative
        let mut renum: HashMap<usize, usize> = HashMap::new();
        let mut reps = Vec::new();
        let mut queue = VecDeque::from([d.initial]);
        let mut visited = vec![false; d.num_states()];
        visited[d.initial] = true;
        while let Some(q) = queue.pop_front() {
            if !renum.contains_key(&class[q]) {
                renum.insert(class[q], reps.len());
                reps.push(q);
            }
            for l in 0..m {
                let r = d.delta[q][l].expect("complete");
                if !visited[r] {
                    visited[r] = true;
                    queue.push_back(r);
                }
            }
        }
        let delta = reps
            .iter()
            .map(|&q| {
                (0..m)
                    .map(|l| Some(renum[&class[d.delta[q][l].expect("complete")]]))
                    .collect()
            })
            .collect();
        Dfa {
            alphabet: d.alphabet.clone(),
            states: (0..reps.len()).map(|i| format!("m{i}")).collect(),
            initial: 0,
            accepting: reps.iter().map(|&q| d.accepting[q]).collect(),
            delta,
        }
    }
}

/// Subset construction over reachable subsets. The result is complete: the
/// empty subset, when reachable, is the rejecting sink.
pub fn determinize(nfa: &Nfa) -> Dfa {
    let m = nfa.alphabet().len();
    let start = nfa.initial_set();
    let mut ids: HashMap<BitSet, StateId> = HashMap::new();
    let mut subsets = vec![start.clone()];
    ids.insert(start, 0);
    let mut delta: Vec<Vec<Option<StateId>>> = Vec::new();
    let mut i = 0;
    while i < subsets.len() {
        let cur = subsets[i].clone();
        let mut row = Vec::with_capacity(m);
        for l in 0..m {
            let next = nfa.step(&cur, l);
            let id = match ids.get(&next) {
                Some(&id) => id,
                None => {
                    subsets.push(next.clone());
                    ids.insert(next, subsets.len() - 1);
                    subsets.len() - 1
                }
            };
            row.push(Some(id));
        }
        delta.push(row);
        i += 1;
    }
    let names = subsets
        .iter()
        .map(|s| {
            let inner: Vec<&str> = s.iter().map(|q| nfa.state_name(q)).collect();
            format!("{{{}}}", inner.join(","))
        })
        .collect();
    let accepting = subsets
        .iter()
        .map(|s| s.iter().any(|q| nfa.is_accepting(q)))
        .collect();
    Dfa {
        alphabet: nfa.alphabet().to_vec(),
        states: unique_names(names),
        initial: 0,
        accepting,
        delta,
    }
}

pub fn minimize(d: &Dfa) -> Dfa {
    d.minimize()
}

pub fn complement(d: &Dfa) -> Dfa {
    d.complement()
}
