//! Compile a regex, determinize, minimize, and print the JSON and DOT forms.

use regsep::automata::{determinize, dfa_to_json, regex_to_nfa, to_dot};
use regsep::word;

fn main() -> regsep::Result<()> {
    let nfa = regex_to_nfa("(a|b)*abb")?;
    println!("position automaton: {} states", nfa.num_states());
    let dfa = determinize(&nfa).minimize();
    println!("minimal DFA: {} states", dfa.num_states());
    for w in ["abb", "babb", "ab", ""] {
        println!("  {w:>5} -> {}", dfa.accepts(&word(w)));
    }
    println!("{}", serde_json::to_string_pretty(&dfa_to_json(&dfa))?);
    print!("{}", to_dot(&dfa.to_nfa(), "abb", None));
    Ok(())
}
