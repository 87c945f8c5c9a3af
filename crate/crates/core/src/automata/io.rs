use std::collections::HashMap;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::automata::dfa::Dfa;
use crate::automata::nfa::{Nfa, Transition};
use crate::error::{Error, Result};
use crate::symbol::Symbol;

/// The automaton JSON document.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct AutomatonDoc {
    pub alphabet: Vec<String>,
    pub states: Vec<String>,
    pub initial: Vec<String>,
    #[serde(rename = "final")]
    pub accepting: Vec<String>,
    pub transitions: Vec<(String, String, String)>,
}

impl AutomatonDoc {
    pub fn into_nfa(self) -> Result<Nfa> {
        if self.alphabet.is_empty() {
            return Err(Error::Schema("alphabet must be nonempty".into()));
        }
        if let Some(s) = self.alphabet.iter().find(|s| s.is_empty()) {
            return Err(Error::Schema(format!("invalid symbol name {s:?}")));
        }
        let states: HashMap<&str, usize> = self
            .states
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i))
            .collect();
        let letters: HashMap<&str, usize> = self
            .alphabet
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i))
            .collect();
        let state = |name: &String, field: &str| {
            states
                .get(name.as_str())
                .copied()
                .ok_or_else(|| Error::Schema(format!("{field} references undeclared state `{name}`")))
        };
        let initial = self
            .initial
            .iter()
            .map(|s| state(s, "initial"))
            .collect::<Result<Vec<_>>>()?;
        let accepting = self
            .accepting
            .iter()
            .map(|s| state(s, "final"))
            .collect::<Result<Vec<_>>>()?;
        let mut ts = Vec::with_capacity(self.transitions.len());
        for (src, sym, dst) in &self.transitions {
            let letter = *letters.get(sym.as_str()).ok_or_else(|| {
                Error::Schema(format!("transition uses undeclared symbol `{sym}`"))
            })?;
            ts.push(Transition {
                src: state(src, "transition")?,
                letter,
                dst: state(dst, "transition")?,
            });
        }
        Nfa::from_parts(
            self.alphabet.iter().map(|s| Symbol::new(s)).collect(),
            self.states,
            initial,
            accepting,
            ts,
        )
    }

    pub fn from_nfa(nfa: &Nfa) -> AutomatonDoc {
        AutomatonDoc {
            alphabet: nfa.alphabet().iter().map(|s| s.to_string()).collect(),
            states: nfa.state_names().to_vec(),
            initial: nfa
                .initial()
                .iter()
                .map(|&q| nfa.state_name(q).to_string())
                .collect(),
            accepting: nfa.accepting().map(|q| nfa.state_name(q).to_string()).collect(),
            transitions: nfa
                .transitions()
                .iter()
                .map(|t| {
                    (
                        nfa.state_name(t.src).to_string(),
                        nfa.symbol(t.letter).to_string(),
                        nfa.state_name(t.dst).to_string(),
                    )
                })
                .collect(),
        }
    }
}

/// Parses an automaton JSON document. Unknown top-level fields are ignored.
pub fn parse_nfa(text: &str) -> Result<Nfa> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    let doc: AutomatonDoc =
        serde_json::from_value(value).map_err(|e| Error::Schema(e.to_string()))?;
    doc.into_nfa()
}

pub fn nfa_to_json(nfa: &Nfa) -> serde_json::Value {
    serde_json::to_value(AutomatonDoc::from_nfa(nfa)).expect("document serializes")
}

pub fn dfa_to_json(dfa: &Dfa) -> serde_json::Value {
    nfa_to_json(&dfa.to_nfa())
}

/// Extra attributes for edges in a DOT rendering, keyed by transition.
pub type EdgeStyle = HashMap<Transition, String>;

/// Graphviz rendering with byte-stable output: one node per state (sorted by
/// name, `doublecircle` when final, bold when initial) and one edge per
/// transition sorted by `(source, symbol, target)` names.
pub fn to_dot(nfa: &Nfa, name: &str, edge_style: Option<&EdgeStyle>) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {name:?} {{").unwrap();
    writeln!(out, "  rankdir=LR;").unwrap();
    let mut states: Vec<usize> = (0..nfa.num_states()).collect();
    states.sort_by(|&a, &b| nfa.state_name(a).cmp(nfa.state_name(b)));
    for q in states {
        let shape = if nfa.is_accepting(q) {
            "doublecircle"
        } else {
            "circle"
        };
        let style = if nfa.is_initial(q) { ", style=bold" } else { "" };
        writeln!(out, "  {:?} [shape={shape}{style}];", nfa.state_name(q)).unwrap();
    }
    let mut ts: Vec<&Transition> = nfa.transitions().iter().collect();
    ts.sort_by(|a, b| {
        (nfa.state_name(a.src), nfa.symbol(a.letter), nfa.state_name(a.dst)).cmp(&(
            nfa.state_name(b.src),
            nfa.symbol(b.letter),
            nfa.state_name(b.dst),
        ))
    });
    for t in ts {
        let extra = edge_style
            .and_then(|s| s.get(t))
            .map(|s| format!(", {s}"))
            .unwrap_or_default();
        writeln!(
            out,
            "  {:?} -> {:?} [label={:?}{extra}];",
            nfa.state_name(t.src),
            nfa.state_name(t.dst),
            nfa.symbol(t.letter).as_str()
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}
