//! Pieces, the relation ~κ, and the κ-abstractions of a language.

use regsep::automata::regex_to_nfa;
use regsep::pieces::{abstraction_set, is_piece, kpeq, pieces_up_to, DEFAULT_BUDGET};
use regsep::word;

fn main() -> regsep::Result<()> {
    println!("ab is a piece of bbaccba: {}", is_piece(&word("ab"), &word("bbaccba")));
    let p = pieces_up_to(&word("abba"), 2);
    println!("pieces of abba up to size 2: {}", serde_json::to_string(&p)?);
    for kappa in 1..=3 {
        println!("abab ~{kappa} baba: {}", kpeq(&word("abab"), &word("baba"), kappa));
    }
    let a = regex_to_nfa("(ab)*")?;
    for kappa in 0..=2 {
        let set = abstraction_set(&a, kappa, DEFAULT_BUDGET)?;
        println!("(ab)* has {} distinct {kappa}-abstractions", set.sets.len());
    }
    Ok(())
}
