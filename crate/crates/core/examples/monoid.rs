//! Syntactic monoids and evaluation of words in them.

use regsep::automata::regex_to_nfa;
use regsep::monoid::{evaluate, syntactic_monoid};
use regsep::word;

fn main() -> regsep::Result<()> {
    let m = syntactic_monoid(&regex_to_nfa("(ab)*")?)?;
    println!("(ab)* has a monoid of {} elements", m.size());
    for w in ["", "ab", "abab", "ba", "aa", "aba"] {
        let x = evaluate(&m, &word(w))?;
        println!("  {w:>4} -> element {x}, accepting {}", m.is_accepting(x));
    }
    println!("{}", serde_json::to_string(&m)?);
    Ok(())
}
