//! Automaton representation, ingestion and the standard constructions.

pub mod dfa;
pub mod io;
pub mod nfa;
pub mod regex;
pub mod scc;

pub use dfa::{complement, determinize, minimize, Dfa};
pub use io::{dfa_to_json, nfa_to_json, parse_nfa, to_dot, AutomatonDoc, EdgeStyle};
pub use nfa::{align, joint_alphabet, product, Letter, Nfa, StateId, Transition};
pub use regex::regex_to_nfa;
pub use scc::{scc_alphabet, sccs, SccInfo};
