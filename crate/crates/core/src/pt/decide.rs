use std::collections::VecDeque;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::automata::{align, Letter, Nfa, SccInfo, StateId};
use crate::bitset::BitSet;
use crate::pt::loops::{loop_nodes, LoopNode};
use crate::pt::witness::{FactorizationPair, Segment, SegmentKind, Step, Witness, WitnessPath};

/// Outcome of the separability decision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PtVerdict {
    Separable,
    NotSeparable(Witness),
}

impl PtVerdict {
    pub fn is_separable(&self) -> bool {
        matches!(self, PtVerdict::Separable)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            PtVerdict::Separable => None,
            PtVerdict::NotSeparable(w) => Some(w),
        }
    }
}

impl Serialize for PtVerdict {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("PtVerdict", 2)?;
        s.serialize_field("separable", &self.is_separable())?;
        s.serialize_field("witness", &self.witness())?;
        s.end()
    }
}

#[derive(Clone, Copy, Debug)]
enum Move {
    Letter(Letter),
    Summary,
}

/// Decides separability by a piecewise testable language: searches the
/// product of both automata extended with summary moves
/// `p →(⊆B) q →(=B) q →(⊆B) r`, synchronised on a common `B`.
///
/// The search is breadth-first; from each pair, summary moves come before
/// letter moves, and each group is ordered by target. The first accepting
/// pair reached yields the witness.
pub fn decide_pt_separable(a1: &Nfa, a2: &Nfa) -> PtVerdict {
    let (b1, b2) = align(a1, a2);
    let loops = loop_nodes(&b1, &b2);
    let n2 = b2.num_states();
    let total = b1.num_states() * n2;
    let mut seen = BitSet::new(total);
    let mut parent: Vec<Option<(usize, Move)>> = vec![None; total];
    let mut expanded = vec![false; loops.len()];
    let mut queue = VecDeque::new();
    for &p1 in b1.initial() {
        for &p2 in b2.initial() {
            if seen.insert(p1 * n2 + p2) {
                queue.push_back(p1 * n2 + p2);
            }
        }
    }
    while let Some(id) = queue.pop_front() {
        let (p1, p2) = (id / n2, id % n2);
        if b1.is_accepting(p1) && b2.is_accepting(p2) {
            return PtVerdict::NotSeparable(reconstruct(&b1, &b2, &loops, &parent, id));
        }
        let mut targets = Vec::new();
        for (i, node) in loops.iter().enumerate() {
            if expanded[i] || !node.back1.contains(p1) || !node.back2.contains(p2) {
                continue;
            }
            // every later expansion would only rediscover these targets
            expanded[i] = true;
            for r1 in node.fwd1.iter() {
                for r2 in node.fwd2.iter() {
                    if !seen.contains(r1 * n2 + r2) {
                        targets.push(r1 * n2 + r2);
                    }
                }
            }
        }
        targets.sort_unstable();
        targets.dedup();
        for t in targets {
            seen.insert(t);
            parent[t] = Some((id, Move::Summary));
            queue.push_back(t);
        }
        for &(l, r1) in b1.successors(p1) {
            for &(l2, r2) in b2.successors(p2) {
                if l2 == l && seen.insert(r1 * n2 + r2) {
                    parent[r1 * n2 + r2] = Some((id, Move::Letter(l)));
                    queue.push_back(r1 * n2 + r2);
                }
            }
        }
    }
    PtVerdict::Separable
}

enum Item {
    Letter(Letter, StateId),
    Block { from: StateId, at: StateId, to: StateId },
}

fn reconstruct(
    b1: &Nfa,
    b2: &Nfa,
    loops: &[LoopNode],
    parent: &[Option<(usize, Move)>],
    end: usize,
) -> Witness {
    let n2 = b2.num_states();
    let mut moves = Vec::new();
    let mut cur = end;
    while let Some((prev, mv)) = parent[cur] {
        moves.push((prev, mv, cur));
        cur = prev;
    }
    moves.reverse();
    let start = cur;

    let mut u = vec![Vec::new()];
    let mut blocks = Vec::new();
    let mut items1 = Vec::new();
    let mut items2 = Vec::new();
    let mut loop_states = Vec::new();
    for &(from, mv, to) in &moves {
        let (p1, p2, r1, r2) = (from / n2, from % n2, to / n2, to % n2);
        match mv {
            Move::Letter(l) => {
                u.last_mut().expect("u is never empty").push(b1.symbol(l).clone());
                items1.push(Item::Letter(l, r1));
                items2.push(Item::Letter(l, r2));
            }
            Move::Summary => {
                let node = loops
                    .iter()
                    .find(|n| n.realizes(p1, r1, p2, r2))
                    .expect("summary move has a realizing loop node");
                blocks.push(node.letters.clone());
                u.push(Vec::new());
                items1.push(Item::Block { from: p1, at: node.q1, to: r1 });
                items2.push(Item::Block { from: p2, at: node.q2, to: r2 });
                loop_states.push((
                    b1.state_name(node.q1).to_string(),
                    b2.state_name(node.q2).to_string(),
                ));
            }
        }
    }
    Witness {
        pair: FactorizationPair {
            u,
            b: blocks
                .iter()
                .map(|b| b.iter().map(|l| b1.symbol(l).clone()).collect())
                .collect(),
        },
        path1: build_path(b1, start / n2, &items1, &blocks),
        path2: build_path(b2, start % n2, &items2, &blocks),
        loop_states,
    }
}

fn to_steps(nfa: &Nfa, steps: &[(Letter, StateId)]) -> Vec<Step> {
    steps
        .iter()
        .map(|&(l, q)| Step {
            symbol: nfa.symbol(l).clone(),
            target: nfa.state_name(q).to_string(),
        })
        .collect()
}

fn build_path(nfa: &Nfa, start: StateId, items: &[Item], blocks: &[BitSet]) -> WitnessPath {
    let mut segments = vec![Segment {
        kind: SegmentKind::Word,
        index: 0,
        steps: Vec::new(),
    }];
    let mut block = 0;
    for item in items {
        match *item {
            Item::Letter(l, q) => segments
                .last_mut()
                .expect("segments start with a word")
                .steps
                .extend(to_steps(nfa, &[(l, q)])),
            Item::Block { from, at, to } => {
                let letters = &blocks[block];
                block += 1;
                let enter = nfa
                    .shortest_path(from, at, letters, None)
                    .expect("block entry reaches the loop state");
                let exit = nfa
                    .shortest_path(at, to, letters, None)
                    .expect("loop state reaches the block exit");
                let walk = covering_walk(nfa, at, letters);
                for (kind, steps) in [
                    (SegmentKind::Enter, enter),
                    (SegmentKind::Loop, walk),
                    (SegmentKind::Exit, exit),
                    (SegmentKind::Word, Vec::new()),
                ] {
                    segments.push(Segment {
                        kind,
                        index: block,
                        steps: to_steps(nfa, &steps),
                    });
                }
            }
        }
    }
    WitnessPath {
        start: nfa.state_name(start).to_string(),
        segments,
    }
}

/// A closed walk at `q` inside its component of `A↾letters` that reads
/// every letter of `letters`. For each letter not yet read, walks to the
/// first transition carrying it, takes it, and finally returns to `q`.
pub(crate) fn covering_walk(nfa: &Nfa, q: StateId, letters: &BitSet) -> Vec<(Letter, StateId)> {
    let info = SccInfo::compute(nfa, Some(letters));
    let comp = info.members(info.component[q]);
    let mut walk: Vec<(Letter, StateId)> = Vec::new();
    let mut read = BitSet::new(nfa.alphabet().len());
    let mut cur = q;
    for l in letters.iter() {
        if read.contains(l) {
            continue;
        }
        let t = nfa
            .transitions()
            .iter()
            .find(|t| t.letter == l && comp.contains(t.src) && comp.contains(t.dst))
            .expect("component carries every loop letter");
        let approach = nfa
            .shortest_path(cur, t.src, letters, Some(&comp))
            .expect("component is strongly connected");
        walk.extend(approach);
        walk.push((l, t.dst));
        cur = t.dst;
        for &(x, _) in &walk {
            read.insert(x);
        }
    }
    walk.extend(
        nfa.shortest_path(cur, q, letters, Some(&comp))
            .expect("component is strongly connected"),
    );
    walk
}
