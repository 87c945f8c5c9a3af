use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::automata::{align, Nfa, Transition};
use crate::error::Result;
use crate::pt::loops::loop_nodes;
use crate::symbol::Symbol;

/// One summary letter `a_τ`, `τ = (p1, r1, p2, r2)`, with one realizing
/// pair of loop states and their common loop alphabet.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SummaryLetter {
    pub symbol: Symbol,
    pub tau: [String; 4],
    pub q1: String,
    pub q2: String,
    #[serde(rename = "B")]
    pub b: BTreeSet<Symbol>,
}

/// Both automata extended with the summary letters.
#[derive(Clone, Debug)]
pub struct SummaryAutomata {
    pub a1: Nfa,
    pub a2: Nfa,
    pub table: Vec<SummaryLetter>,
}

/// Builds the summary automata explicitly. Their languages intersect iff
/// the inputs are not separable. Summary letters are ordered by `τ` (state
/// indices), each realized by the least `(q1, q2)`.
pub fn build_summary_automata(a1: &Nfa, a2: &Nfa) -> Result<SummaryAutomata> {
    let (b1, b2) = align(a1, a2);
    let loops = loop_nodes(&b1, &b2);
    let mut taus: BTreeMap<[usize; 4], usize> = BTreeMap::new();
    for (i, node) in loops.iter().enumerate() {
        for p1 in node.back1.iter() {
            for r1 in node.fwd1.iter() {
                for p2 in node.back2.iter() {
                    for r2 in node.fwd2.iter() {
                        taus.entry([p1, r1, p2, r2]).or_insert(i);
                    }
                }
            }
        }
    }
    let mut alphabet = b1.alphabet().to_vec();
    let mut extra1 = Vec::new();
    let mut extra2 = Vec::new();
    let mut table = Vec::new();
    for (&[p1, r1, p2, r2], &i) in &taus {
        let node = &loops[i];
        let mut name = format!(
            "#({},{},{},{})",
            b1.state_name(p1),
            b1.state_name(r1),
            b2.state_name(p2),
            b2.state_name(r2)
        );
        while alphabet.iter().any(|s| s.as_str() == name) {
            name.push('\'');
        }
        let letter = alphabet.len();
        alphabet.push(Symbol::from(name.as_str()));
        extra1.push(Transition { src: p1, letter, dst: r1 });
        extra2.push(Transition { src: p2, letter, dst: r2 });
        table.push(SummaryLetter {
            symbol: Symbol::from(name.as_str()),
            tau: [
                b1.state_name(p1).to_string(),
                b1.state_name(r1).to_string(),
                b2.state_name(p2).to_string(),
                b2.state_name(r2).to_string(),
            ],
            q1: b1.state_name(node.q1).to_string(),
            q2: b2.state_name(node.q2).to_string(),
            b: node.letters.iter().map(|l| b1.symbol(l).clone()).collect(),
        });
    }
    let extend = |b: &Nfa, extra: Vec<Transition>| {
        Nfa::from_parts(
            alphabet.clone(),
            b.state_names().to_vec(),
            b.initial().iter().copied(),
            b.accepting(),
            b.transitions().iter().copied().chain(extra),
        )
    };
    Ok(SummaryAutomata {
        a1: extend(&b1, extra1)?,
        a2: extend(&b2, extra2)?,
        table,
    })
}
