//! Search for the least κ and build the separating DFA [L1]κ.

use regsep::automata::{align, product, regex_to_nfa};
use regsep::pieces::{min_kappa, separator, DEFAULT_BUDGET};
use regsep::word;

fn main() -> regsep::Result<()> {
    let (a1, a2) = align(&regex_to_nfa("a*b*")?, &regex_to_nfa("b(a|b)*a")?);
    let Some(kappa) = min_kappa(&a1, &a2, 4, DEFAULT_BUDGET)? else {
        println!("no level up to 4 separates");
        return Ok(());
    };
    let sep = separator(&a1, a1.alphabet(), kappa, DEFAULT_BUDGET)?;
    println!("κ = {kappa}, {} abstractions, {} states", sep.num_abstractions, sep.dfa.num_states());
    println!("states: {:?}", sep.dfa.state_names());
    println!("disjoint from L2: {}", product(&sep.dfa.to_nfa(), &a2).is_empty());
    for w in ["", "aab", "abb", "ba", "bab"] {
        println!("  {w:>5} -> {}", sep.dfa.accepts(&word(w)));
    }
    Ok(())
}
