use std::collections::BTreeSet;

use serde::Serialize;

use crate::automata::{EdgeStyle, Nfa, Transition};
use crate::error::{Error, Result};
use crate::symbol::{Symbol, Word};

/// `(ū, B̄)` with `ū = (u0,…,up)` and `B̄ = (B1,…,Bp)`, every `Bi` nonempty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorizationPair {
    pub u: Vec<Word>,
    #[serde(rename = "B")]
    pub b: Vec<BTreeSet<Symbol>>,
}

impl FactorizationPair {
    pub fn is_well_formed(&self) -> bool {
        self.u.len() == self.b.len() + 1 && self.b.iter().all(|b| !b.is_empty())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SegmentKind {
    /// Reads `u_index` exactly.
    Word,
    /// Letters of `B_index`, from the block entry to the loop state.
    Enter,
    /// Closed walk at the loop state using every letter of `B_index`.
    Loop,
    /// Letters of `B_index`, from the loop state to the block exit.
    Exit,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Step {
    pub symbol: Symbol,
    pub target: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Segment {
    pub kind: SegmentKind,
    pub index: usize,
    pub steps: Vec<Step>,
}

/// A run decomposed into the segments of a `(ū, B̄)`-path. The segment
/// sequence is `Word 0`, then `Enter i, Loop i, Exit i, Word i` for each
/// block `i = 1..p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessPath {
    pub start: String,
    pub segments: Vec<Segment>,
}

impl WitnessPath {
    /// Visited states, starting state included.
    pub fn states(&self) -> Vec<String> {
        let mut out = vec![self.start.clone()];
        out.extend(self.steps().map(|s| s.target.clone()));
        out
    }

    pub fn word(&self) -> Word {
        self.steps().map(|s| s.symbol.clone()).collect()
    }

    fn steps(&self) -> impl Iterator<Item = &Step> {
        self.segments.iter().flat_map(|s| &s.steps)
    }

    /// The run with every loop segment repeated `times` times.
    pub fn pumped_word(&self, times: usize) -> Word {
        let mut out = Vec::new();
        for seg in &self.segments {
            let reps = if seg.kind == SegmentKind::Loop { times } else { 1 };
            for _ in 0..reps {
                out.extend(seg.steps.iter().map(|s| s.symbol.clone()));
            }
        }
        out
    }

    fn has_expected_shape(&self, blocks: usize) -> bool {
        let expected = std::iter::once((SegmentKind::Word, 0)).chain((1..=blocks).flat_map(|i| {
            [
                (SegmentKind::Enter, i),
                (SegmentKind::Loop, i),
                (SegmentKind::Exit, i),
                (SegmentKind::Word, i),
            ]
        }));
        self.segments.iter().map(|s| (s.kind, s.index)).eq(expected)
    }
}

/// A witness of non-separability: one `(ū, B̄)`-path in each automaton.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub pair: FactorizationPair,
    pub path1: WitnessPath,
    pub path2: WitnessPath,
    /// Per block, the states carrying the `(=B_i)`-loops.
    pub loop_states: Vec<(String, String)>,
}

impl Witness {
    /// The same witness read from the other side.
    pub fn swapped(&self) -> Witness {
        Witness {
            pair: self.pair.clone(),
            path1: self.path2.clone(),
            path2: self.path1.clone(),
            loop_states: self.loop_states.iter().map(|(a, b)| (b.clone(), a.clone())).collect(),
        }
    }
}

fn check_path(
    path: &WitnessPath,
    nfa: &Nfa,
    pair: &FactorizationPair,
    loop_state: impl Fn(usize) -> String,
) -> bool {
    if !path.has_expected_shape(pair.b.len()) {
        return false;
    }
    let Some(mut q) = nfa.state_id(&path.start) else {
        return false;
    };
    if !nfa.is_initial(q) {
        return false;
    }
    for seg in &path.segments {
        let entry = q;
        let mut read = Vec::new();
        for step in &seg.steps {
            let (Some(l), Some(r)) = (nfa.letter(&step.symbol), nfa.state_id(&step.target)) else {
                return false;
            };
            if !nfa.has_transition(q, l, r) {
                return false;
            }
            read.push(step.symbol.clone());
            q = r;
        }
        let ok = match seg.kind {
            SegmentKind::Word => read == pair.u[seg.index],
            SegmentKind::Enter | SegmentKind::Exit => {
                read.iter().all(|s| pair.b[seg.index - 1].contains(s))
                    && (seg.kind == SegmentKind::Exit
                        || nfa.state_name(q) == loop_state(seg.index - 1))
            }
            SegmentKind::Loop => {
                let used: BTreeSet<Symbol> = read.into_iter().collect();
                q == entry
                    && nfa.state_name(q) == loop_state(seg.index - 1)
                    && used == pair.b[seg.index - 1]
            }
        };
        if !ok {
            return false;
        }
    }
    nfa.is_accepting(q)
}

/// Re-checks every segment of both paths: labels, transitions, the
/// `⊆B_i` connectors, the `(=B_i)`-loops at the recorded states, and the
/// initial and final endpoints.
pub fn verify_witness(w: &Witness, a1: &Nfa, a2: &Nfa) -> bool {
    w.pair.is_well_formed()
        && w.loop_states.len() == w.pair.b.len()
        && check_path(&w.path1, a1, &w.pair, |i| w.loop_states[i].0.clone())
        && check_path(&w.path2, a2, &w.pair, |i| w.loop_states[i].1.clone())
}

/// Words `(w1, w2)` read along both paths with every loop taken `kappa`
/// times. Each block then holds a `kappa`-power `B_i`-pattern, so
/// `w1 ~kappa w2`.
pub fn pump_witness(w: &Witness, kappa: usize) -> Result<(Word, Word)> {
    let blocks = w.pair.b.len();
    if !w.pair.is_well_formed()
        || w.loop_states.len() != blocks
        || !w.path1.has_expected_shape(blocks)
        || !w.path2.has_expected_shape(blocks)
    {
        return Err(Error::InvalidWitness("segments do not follow the factorization pair".into()));
    }
    for path in [&w.path1, &w.path2] {
        for seg in &path.segments {
            if seg.kind == SegmentKind::Loop {
                let used: BTreeSet<Symbol> = seg.steps.iter().map(|s| s.symbol.clone()).collect();
                if used != w.pair.b[seg.index - 1] {
                    return Err(Error::InvalidWitness(format!(
                        "loop {} does not use exactly its block alphabet",
                        seg.index
                    )));
                }
            }
        }
    }
    Ok((w.path1.pumped_word(kappa), w.path2.pumped_word(kappa)))
}

/// Edge attributes highlighting a witness path: words in blue, connectors
/// in orange, loops in red.
pub fn witness_edge_style(nfa: &Nfa, path: &WitnessPath) -> EdgeStyle {
    let mut style = EdgeStyle::new();
    let Some(mut q) = nfa.state_id(&path.start) else {
        return style;
    };
    for seg in &path.segments {
        let color = match seg.kind {
            SegmentKind::Word => "blue",
            SegmentKind::Enter | SegmentKind::Exit => "orange",
            SegmentKind::Loop => "red",
        };
        for step in &seg.steps {
            let (Some(letter), Some(dst)) = (nfa.letter(&step.symbol), nfa.state_id(&step.target))
            else {
                return style;
            };
            // loops take precedence over connectors, connectors over words
            let t = Transition { src: q, letter, dst };
            let rank = |c: &str| ["blue", "orange", "red"].iter().position(|x| c.contains(x));
            let current = style.get(&t).and_then(|s| rank(s));
            if current < rank(color) {
                style.insert(t, format!("color={color}, penwidth=2"));
            }
            q = dst;
        }
    }
    style
}
