use crate::automata::nfa::{Nfa, StateId};
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::symbol::Symbol;

/// Strongly connected components of an automaton's transition graph,
/// optionally restricted to a letter set.
#[derive(Clone, Debug)]
pub struct SccInfo {
    /// Component index of every state.
    pub component: Vec<usize>,
    /// Letters labelling transitions with both endpoints in the component.
    pub alphabet: Vec<BitSet>,
    pub count: usize,
}

impl SccInfo {
    /// Iterative Tarjan over the transitions labelled in `allowed`.
    pub fn compute(nfa: &Nfa, allowed: Option<&BitSet>) -> SccInfo {
        let n = nfa.num_states();
        const UNSEEN: usize = usize::MAX;
        let mut index = vec![UNSEEN; n];
        let mut low = vec![0usize; n];
        let mut on_stack = vec![false; n];
        let mut stack: Vec<StateId> = Vec::new();
        let mut component = vec![UNSEEN; n];
        let mut count = 0;
        let mut next_index = 0;
        for root in 0..n {
            if index[root] != UNSEEN {
                continue;
            }
            // (state, position in its successor list)
            let mut call: Vec<(StateId, usize)> = vec![(root, 0)];
            index[root] = next_index;
            low[root] = next_index;
            next_index += 1;
            stack.push(root);
            on_stack[root] = true;
            while let Some(&mut (v, ref mut pos)) = call.last_mut() {
                let out = nfa.successors(v);
                while *pos < out.len() && !allowed.is_none_or(|a| a.contains(out[*pos].0)) {
                    *pos += 1;
                }
                if *pos < out.len() {
                    let w = out[*pos].1;
                    *pos += 1;
                    if index[w] == UNSEEN {
                        index[w] = next_index;
                        low[w] = next_index;
                        next_index += 1;
                        stack.push(w);
                        on_stack[w] = true;
                        call.push((w, 0));
                    } else if on_stack[w] {
                        low[v] = low[v].min(index[w]);
                    }
                } else {
                    call.pop();
                    if let Some(&(parent, _)) = call.last() {
                        low[parent] = low[parent].min(low[v]);
                    }
                    if low[v] == index[v] {
                        loop {
                            let w = stack.pop().expect("tarjan stack");
                            on_stack[w] = false;
                            component[w] = count;
                            if w == v {
                                break;
                            }
                        }
                        count += 1;
                    }
                }
            }
        }
        let mut alphabet = vec![BitSet::new(nfa.alphabet().len()); count];
        for t in nfa.transitions() {
            if allowed.is_none_or(|a| a.contains(t.letter)) && component[t.src] == component[t.dst] {
                alphabet[component[t.src]].insert(t.letter);
            }
        }
        SccInfo {
            component,
            alphabet,
            count,
        }
    }

    pub fn members(&self, c: usize) -> BitSet {
        self.component
            .iter()
            .enumerate()
            .filter(|(_, &k)| k == c)
            .map(|(q, _)| q)
            .collect()
    }
}

/// Partition of the states into strongly connected components. Blocks are
/// sorted internally and ordered by their smallest state.
pub fn sccs(nfa: &Nfa) -> Vec<Vec<StateId>> {
    let info = SccInfo::compute(nfa, None);
    let mut blocks = vec![Vec::new(); info.count];
    for (q, &c) in info.component.iter().enumerate() {
        blocks[c].push(q);
    }
    blocks.sort();
    blocks
}

/// Labels of the transitions inside the component of `p`; empty for a
/// trivial component.
pub fn scc_alphabet(nfa: &Nfa, p: StateId) -> Result<Vec<Symbol>> {
    if p >= nfa.num_states() {
        return Err(Error::UnknownState(p.to_string()));
    }
    let info = SccInfo::compute(nfa, None);
    Ok(info.alphabet[info.component[p]]
        .iter()
        .map(|l| nfa.symbol(l).clone())
        .collect())
}
